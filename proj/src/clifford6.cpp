#include "nk/clifford6.hpp"

#include "nk/errors.hpp"

#include <bit>
#include <random>
#include <sstream>

namespace nk {

namespace {

// (-1)^(number of pairs i in a, j in b with i > j)
int reorder_sign(std::uint8_t a, std::uint8_t b) {
  int swaps = 0;
  for (int j = 0; j < kDim; ++j)
    if (b & (1u << j))
      swaps += std::popcount(static_cast<unsigned>(a >> (j + 1)));
  return swaps % 2 ? -1 : 1;
}

// e_a _| e_I for a single basis vector (bit index a).
std::pair<int, std::uint8_t> contract_vector(int a, std::uint8_t blade) {
  if (!(blade & (1u << a)))
    return {0, 0};
  const int below = std::popcount(static_cast<unsigned>(blade & ((1u << a) - 1)));
  return {below % 2 ? -1 : 1, static_cast<std::uint8_t>(blade & ~(1u << a))};
}

Multivector contract_vector(int a, const Multivector &m) {
  Multivector out;
  for (int i = 0; i < kBlades; ++i) {
    const auto blade = static_cast<std::uint8_t>(i);
    if (m[blade] == 0)
      continue;
    const auto [s, rest] = contract_vector(a, blade);
    if (s != 0)
      out[rest] += s * m[blade];
  }
  return out;
}

RationalMatrix two_by_two(int a, int b, int c, int d) { return RationalMatrix{{a, b}, {c, d}}; }

RationalMatrix kron(const RationalMatrix &a, const RationalMatrix &b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0)
        for (std::size_t k = 0; k < b.rows(); ++k)
          for (std::size_t l = 0; l < b.cols(); ++l)
            out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Rational trace_of_product(const RationalMatrix &a, const RationalMatrix &b) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && b(k, i) != 0)
        t += a(i, k) * b(k, i);
  return t;
}

void require(bool ok, const std::string &what) {
  if (!ok)
    throw IdentityViolation(what);
}

CliffordRep make_rep() {
  const RationalMatrix eps = two_by_two(0, 1, -1, 0);
  const RationalMatrix s1 = two_by_two(0, 1, 1, 0);
  const RationalMatrix s3 = two_by_two(1, 0, 0, -1);
  const RationalMatrix id = RationalMatrix::identity(2);
  auto k3 = [](const RationalMatrix &a, const RationalMatrix &b, const RationalMatrix &c) {
    return kron(kron(a, b), c);
  };
  CliffordRep rep;
  rep.gamma = {k3(eps, id, id), k3(s1, eps, id), k3(s1, s1, eps),
               k3(s1, s3, eps), k3(s3, id, eps), k3(s3, eps, s1)};
  rep.blade_matrix[0] = RationalMatrix::identity(8);
  for (int i = 1; i < kBlades; ++i) {
    const int top = 31 - std::countl_zero(static_cast<unsigned>(i));
    rep.blade_matrix[i] = rep.blade_matrix[i & ~(1 << top)] * rep.gamma[top];
  }
  return rep;
}

void check_rep(const CliffordRep &rep) {
  const RationalMatrix id = RationalMatrix::identity(8);
  for (int a = 0; a < kDim; ++a) {
    require(rep.gamma[a].is_skew_symmetric(), "gamma_" + std::to_string(a + 1) + " is not skew");
    require(rep.gamma[a] * rep.gamma[a].transpose() == id,
            "gamma_" + std::to_string(a + 1) + " is not orthogonal");
    for (int b = 0; b < kDim; ++b) {
      const RationalMatrix anti = rep.gamma[a] * rep.gamma[b] + rep.gamma[b] * rep.gamma[a];
      const RationalMatrix expected = a == b ? id * Rational(-2) : RationalMatrix(8, 8);
      require(anti == expected, "gamma_" + std::to_string(a + 1) + " and gamma_" +
                                    std::to_string(b + 1) + " violate the Clifford relation");
    }
  }
  for (int i = 0; i < kBlades; ++i) {
    const int k = grade_of(static_cast<std::uint8_t>(i));
    const bool symmetric = k == 0 || k == 3 || k == 4;
    const auto &m = rep.blade_matrix[i];
    require(symmetric ? m.is_symmetric() : m.is_skew_symmetric(),
            "matrix of " + blade_name(static_cast<std::uint8_t>(i)) + " has the wrong symmetry");
    for (int j = 0; j < kBlades; ++j) {
      const Rational t = trace_of_product(m.transpose(), rep.blade_matrix[j]);
      require(t == (i == j ? 8 : 0), "blade matrices are not orthogonal under the trace pairing");
    }
  }
  const auto &vol = rep.blade_matrix[kBlades - 1];
  require(vol * vol == id * Rational(-1), "Vol * Vol != -1");
}

} // namespace

// ---------------------------------------------------------------------------
// Multivector

Multivector Multivector::scalar(const Rational &s) {
  Multivector m;
  m.c_[0] = s;
  return m;
}

Multivector Multivector::basis(std::uint8_t blade) {
  if (blade >= kBlades)
    throw PreconditionError("blade index out of range");
  Multivector m;
  m.c_[blade] = 1;
  return m;
}

Multivector Multivector::e(int a) {
  if (a < 1 || a > kDim)
    throw PreconditionError("basis vector index must be in 1..6");
  return basis(static_cast<std::uint8_t>(1u << (a - 1)));
}

Multivector Multivector::volume() { return basis(kBlades - 1); }

Multivector Multivector::grade(int k) const {
  Multivector out;
  for (int i = 0; i < kBlades; ++i)
    if (grade_of(static_cast<std::uint8_t>(i)) == k)
      out.c_[i] = c_[i];
  return out;
}

bool Multivector::is_zero() const {
  for (const auto &c : c_)
    if (c != 0)
      return false;
  return true;
}

Rational Multivector::norm2() const {
  Rational s = 0;
  for (const auto &c : c_)
    s += c * c;
  return s;
}

Multivector &Multivector::operator+=(const Multivector &o) {
  for (int i = 0; i < kBlades; ++i)
    c_[i] += o.c_[i];
  return *this;
}

Multivector &Multivector::operator-=(const Multivector &o) {
  for (int i = 0; i < kBlades; ++i)
    c_[i] -= o.c_[i];
  return *this;
}

Multivector &Multivector::operator*=(const Rational &s) {
  for (auto &c : c_)
    c *= s;
  return *this;
}

int grade_of(std::uint8_t blade) { return std::popcount(static_cast<unsigned>(blade)); }

std::string blade_name(std::uint8_t blade) {
  if (blade == 0)
    return "1";
  std::string s = "e";
  for (int a = 0; a < kDim; ++a)
    if (blade & (1u << a))
      s += std::to_string(a + 1);
  return s;
}

std::string to_string(const Multivector &m) {
  std::string s;
  for (int i = 0; i < kBlades; ++i) {
    const auto blade = static_cast<std::uint8_t>(i);
    if (m[blade] == 0)
      continue;
    const Rational c = m[blade];
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    const Rational mag = abs(c);
    if (mag != 1 || blade == 0)
      s += to_string(mag) + (blade ? "*" : "");
    if (blade)
      s += blade_name(blade);
  }
  return s.empty() ? "0" : s;
}

Multivector wedge(const Multivector &a, const Multivector &b) {
  Multivector out;
  for (int i = 0; i < kBlades; ++i) {
    if (a[i] == 0)
      continue;
    for (int j = 0; j < kBlades; ++j) {
      if (b[j] == 0 || (i & j))
        continue;
      out[static_cast<std::uint8_t>(i | j)] +=
          reorder_sign(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)) * a[i] * b[j];
    }
  }
  return out;
}

Multivector clifford(const Multivector &a, const Multivector &b) {
  Multivector out;
  for (int i = 0; i < kBlades; ++i) {
    if (a[i] == 0)
      continue;
    for (int j = 0; j < kBlades; ++j) {
      if (b[j] == 0)
        continue;
      int s = reorder_sign(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
      if (std::popcount(static_cast<unsigned>(i & j)) % 2)
        s = -s;
      out[static_cast<std::uint8_t>(i ^ j)] += s * a[i] * b[j];
    }
  }
  return out;
}

Multivector commutator(const Multivector &a, const Multivector &b) {
  return clifford(a, b) - clifford(b, a);
}

Multivector anticommutator(const Multivector &a, const Multivector &b) {
  return clifford(a, b) + clifford(b, a);
}

Multivector contract(const Multivector &a, const Multivector &b) {
  Multivector out;
  for (int i = 0; i < kBlades; ++i) {
    if (a[i] == 0)
      continue;
    Multivector cur = b;
    for (int k = 0; k < kDim && !cur.is_zero(); ++k)
      if (i & (1 << k))
        cur = contract_vector(k, cur);
    out += cur * a[i];
  }
  return out;
}

Multivector hodge(const Multivector &a) {
  Multivector out;
  for (int i = 0; i < kBlades; ++i) {
    if (a[i] == 0)
      continue;
    const auto blade = static_cast<std::uint8_t>(i);
    const auto rest = static_cast<std::uint8_t>((kBlades - 1) & ~i);
    out[rest] += reorder_sign(blade, rest) * a[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Representation

RationalMatrix CliffordRep::matrix(const Multivector &m) const {
  RationalMatrix out(8, 8);
  for (int i = 0; i < kBlades; ++i)
    if (m[static_cast<std::uint8_t>(i)] != 0)
      out += blade_matrix[i] * m[static_cast<std::uint8_t>(i)];
  return out;
}

Multivector CliffordRep::multivector(const RationalMatrix &m) const {
  Multivector out;
  for (int i = 0; i < kBlades; ++i)
    out[static_cast<std::uint8_t>(i)] = trace_of_product(blade_matrix[i].transpose(), m) / 8;
  return out;
}

const CliffordRep &build_rep() {
  static const CliffordRep rep = [] {
    CliffordRep r = make_rep();
    check_rep(r);
    return r;
  }();
  return rep;
}

Spinor basis_spinor(std::size_t i) {
  if (i >= 8)
    throw PreconditionError("spinor index out of range");
  Spinor s(8, Rational(0));
  s[i] = 1;
  return s;
}

Rational spinor_dot(const Spinor &a, const Spinor &b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Spinor apply(const RationalMatrix &m, const Spinor &s) { return m.apply(s); }

PQ extract_pq(const CliffordRep &rep, const Spinor &psi) {
  if (psi.size() != 8 || spinor_dot(psi, psi) != 1)
    throw PreconditionError("spinor must have 8 components and unit norm");
  RationalMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      m(i, j) = 8 * psi[i] * psi[j];
  const Multivector form = rep.multivector(m);
  require(rep.matrix(form) == m, "8 psi psi^T is not in the span of the blade matrices");
  require(form[0] == 1, "scalar part of 8 psi psi^T is " + to_string(form[0]) + ", expected 1");
  for (int k : {1, 2, 5, 6})
    require(form.grade(k).is_zero(), "8 psi psi^T has a grade " + std::to_string(k) + " part");
  return PQ{form.grade(3), -form.grade(4)};
}

SpinorSpectra spinor_decomposition_spectra(const CliffordRep &rep, const Spinor &psi) {
  const PQ pq = extract_pq(rep, psi);
  const RationalMatrix mp = rep.matrix(pq.p);
  const RationalMatrix mq = rep.matrix(pq.q);
  const RationalMatrix &vol = rep.blade_matrix[kBlades - 1];

  std::vector<std::vector<Spinor>> spaces(3);
  spaces[0].push_back(psi);
  for (int a = 0; a < kDim; ++a)
    spaces[1].push_back(nk::apply(rep.gamma[a], psi));
  spaces[2].push_back(nk::apply(vol, psi));

  std::vector<Spinor> all;
  for (const auto &s : spaces)
    all.insert(all.end(), s.begin(), s.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      require(spinor_dot(all[i], all[j]) == (i == j ? 1 : 0),
              "psi, u psi and Vol psi do not form an orthonormal basis of S");

  auto eigenvalue_on = [&](const RationalMatrix &op, const std::vector<Spinor> &space) {
    const Rational lambda = spinor_dot(space.front(), nk::apply(op, space.front()));
    for (const auto &v : space) {
      Spinor expect = v;
      for (auto &x : expect)
        x *= lambda;
      require(nk::apply(op, v) == expect, "subspace is not an eigenspace");
    }
    return lambda;
  };
  SpinorSpectra out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.p[i] = eigenvalue_on(mp, spaces[i]);
    out.q[i] = eigenvalue_on(mq, spaces[i]);
  }
  return out;
}

RationalMatrix complex_structure(const CliffordRep &rep, const Spinor &psi) {
  const RationalMatrix &vol = rep.blade_matrix[kBlades - 1];
  RationalMatrix j(kDim, kDim);
  for (int a = 0; a < kDim; ++a) {
    const Spinor target = nk::apply(vol * rep.gamma[a], psi);
    Spinor rebuilt(8, Rational(0));
    for (int b = 0; b < kDim; ++b) {
      const Spinor gb = nk::apply(rep.gamma[b], psi);
      j(b, a) = spinor_dot(gb, target);
      for (std::size_t k = 0; k < 8; ++k)
        rebuilt[k] += j(b, a) * gb[k];
    }
    require(rebuilt == target, "Vol u psi does not lie in the span of the u psi");
  }
  require(j * j == RationalMatrix::identity(kDim) * Rational(-1), "J * J != -1");
  require(j * j.transpose() == RationalMatrix::identity(kDim), "J is not orthogonal");
  return j;
}

const std::vector<std::uint8_t> &two_form_blades() {
  static const std::vector<std::uint8_t> blades = [] {
    std::vector<std::uint8_t> b;
    for (int a = 0; a < kDim; ++a)
      for (int c = a + 1; c < kDim; ++c)
        b.push_back(static_cast<std::uint8_t>((1u << a) | (1u << c)));
    return b;
  }();
  return blades;
}

Multivector two_form_from_coords(const std::vector<Rational> &coords) {
  const auto &blades = two_form_blades();
  if (coords.size() != blades.size())
    throw PreconditionError("two-form needs 15 coordinates");
  Multivector m;
  for (std::size_t i = 0; i < blades.size(); ++i)
    m[blades[i]] = coords[i];
  return m;
}

std::vector<Rational> two_form_coords(const Multivector &m) {
  if (!(m.grade(2) == m))
    throw PreconditionError("not a two-form: " + to_string(m));
  std::vector<Rational> out;
  for (auto b : two_form_blades())
    out.push_back(m[b]);
  return out;
}

Multivector kaehler_form(const CliffordRep &rep, const Spinor &psi) {
  const RationalMatrix j = complex_structure(rep, psi);
  const auto &blades = two_form_blades();
  const std::size_t n = blades.size();
  // (1/8) Tr(m_I gamma_c gamma_d) = -J(c, d) over pairs c < d, solved for omega.
  RationalMatrix system(n, n);
  std::vector<Rational> rhs(n);
  for (std::size_t r = 0; r < n; ++r) {
    int c = -1, d = -1;
    for (int a = 0; a < kDim; ++a)
      if (blades[r] & (1u << a))
        (c < 0 ? c : d) = a;
    const RationalMatrix uv = rep.gamma[c] * rep.gamma[d];
    for (std::size_t s = 0; s < n; ++s)
      system(r, s) = trace_of_product(rep.blade_matrix[blades[s]], uv) / 8;
    rhs[r] = -j(c, d);
  }
  const Multivector omega = two_form_from_coords(inverse(system).apply(rhs));
  const RationalMatrix mo = rep.matrix(omega);
  for (int c = 0; c < kDim; ++c)
    for (int d = 0; d < kDim; ++d)
      require(trace_of_product(mo, rep.gamma[c] * rep.gamma[d]) / 8 == -j(c, d),
              "omega does not satisfy its defining trace identity");
  return omega;
}

RationalMatrix q_contraction_operator(const Multivector &q) {
  const auto &blades = two_form_blades();
  RationalMatrix a(blades.size(), blades.size());
  for (std::size_t col = 0; col < blades.size(); ++col) {
    const Multivector image = contract(Multivector::basis(blades[col]), q);
    const auto coords = two_form_coords(image);
    for (std::size_t row = 0; row < blades.size(); ++row)
      a(row, col) = coords[row];
  }
  return a;
}

QContractionSpectrum q_contraction_spectrum(const CliffordRep &rep, const Spinor &psi) {
  const PQ pq = extract_pq(rep, psi);
  QContractionSpectrum out;
  out.operator_matrix = q_contraction_operator(pq.q);
  const std::size_t n = out.operator_matrix.rows();
  const auto factored = factor_rational_roots(characteristic_polynomial(out.operator_matrix));
  if (factored.residual.degree() > 0)
    throw UnexpectedSpectrum("contraction with Q has irrational eigenvalues");
  std::size_t total = 0;
  bool has_minus_one = false;
  for (const auto &[lambda, mult] : factored.roots) {
    const std::size_t dim =
        n - rank(out.operator_matrix - RationalMatrix::identity(n) * lambda);
    if (dim != static_cast<std::size_t>(mult))
      throw UnexpectedSpectrum("contraction with Q is not diagonalisable at " + to_string(lambda));
    out.spaces.push_back({lambda, dim});
    total += dim;
    has_minus_one = has_minus_one || lambda == -1;
  }
  if (total != n || !has_minus_one)
    throw UnexpectedSpectrum("contraction with Q has no -1 eigenspace");

  out.instanton_projector = RationalMatrix::identity(n);
  for (const auto &[lambda, dim] : out.spaces)
    if (lambda != -1)
      out.instanton_projector = out.instanton_projector *
                                (out.operator_matrix - RationalMatrix::identity(n) * lambda) *
                                (Rational(1) / (Rational(-1) - lambda));

  const auto omega = two_form_coords(hodge(pq.q));
  const auto image = out.operator_matrix.apply(omega);
  std::size_t pivot = 0;
  while (omega[pivot] == 0)
    ++pivot;
  out.omega_eigenvalue = image[pivot] / omega[pivot];
  for (std::size_t i = 0; i < n; ++i)
    if (image[i] != out.omega_eigenvalue * omega[i])
      throw UnexpectedSpectrum("*Q is not an eigenvector of contraction with Q");
  return out;
}

// ---------------------------------------------------------------------------
// Identity suite

namespace {

class Sampler {
public:
  explicit Sampler(unsigned seed) : rng_(seed) {}

  Rational coefficient() {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }

  Multivector form(int k) {
    Multivector m;
    for (int i = 0; i < kBlades; ++i)
      if (grade_of(static_cast<std::uint8_t>(i)) == k)
        m[static_cast<std::uint8_t>(i)] = coefficient();
    return m;
  }

private:
  std::mt19937 rng_;
};

Multivector vector_from(const RationalMatrix &j, int a) {
  Multivector v;
  for (int b = 0; b < kDim; ++b)
    v[static_cast<std::uint8_t>(1u << b)] = j(b, a);
  return v;
}

CheckResult check(std::string id, std::string description, bool passed, std::string detail = {}) {
  return CheckResult{std::move(id), std::move(description), passed, std::move(detail)};
}

CheckResult check_lemma_algebra(Sampler &sampler) {
  for (int sample = 0; sample < 4; ++sample)
    for (int p = 0; p <= kDim; ++p) {
      const Multivector alpha = sampler.form(1);
      const Multivector beta = sampler.form(p);
      const Multivector comm = commutator(alpha, beta);
      const Multivector anti = anticommutator(alpha, beta);
      const Multivector w = wedge(alpha, beta) * Rational(2);
      const Multivector c = contract(alpha, beta) * Rational(-2);
      const bool ok = p % 2 ? (comm == w && anti == c) : (comm == c && anti == w);
      if (!ok)
        return check("a", "", false, "fails for a " + std::to_string(p) + "-form");
    }
  return check("a", "", true, "degrees 0..6, 4 random samples each");
}

} // namespace

std::vector<CheckResult> run_identity_suite(const CliffordRep &rep, const Spinor &psi) {
  const PQ pq = extract_pq(rep, psi);
  const Multivector &p = pq.p;
  const Multivector &q = pq.q;
  const Multivector vol = Multivector::volume();
  const Multivector one = Multivector::scalar(1);
  const RationalMatrix j = complex_structure(rep, psi);
  const RationalMatrix mp = rep.matrix(p);
  Sampler sampler(20140611u);

  std::vector<CheckResult> out;

  {
    auto r = check_lemma_algebra(sampler);
    r.description = "[a, b] and {a, b} for a one-form a and a p-form b";
    out.push_back(r);
  }

  {
    const Multivector x = one + p - q;
    const Multivector y = vol + hodge(p) - hodge(q);
    Multivector sum_x, sum_y;
    bool steps = clifford(p, vol) == hodge(p) && clifford(q, vol) == hodge(q);
    for (int a = 1; a <= kDim; ++a) {
      const Multivector e = Multivector::e(a);
      const Multivector half_comm = commutator(e, x) * Rational(1, 2);
      steps = steps && half_comm == wedge(e, p) + contract(e, q);
      steps = steps && clifford(commutator(e, x), vol) == anticommutator(e, y);
      const Multivector half_anti = anticommutator(e, y) * Rational(1, 2);
      steps = steps && half_anti == -contract(e, hodge(p)) - wedge(e, hodge(q));
      sum_x += wedge(e, half_comm);
      sum_y += wedge(e, half_anti);
    }
    const bool ok = steps && sum_x == q * Rational(4) && sum_y == hodge(p) * Rational(-3);
    out.push_back(check("b", "sum_a e^a ^ (e^a ^ P + e^a _| Q) = 4Q and the companion = -3*P", ok,
                        ok ? "" : "sum: " + to_string(sum_x) + "; companion: " + to_string(sum_y)));
  }

  {
    const Multivector lhs = clifford(hodge(q), hodge(q));
    const Multivector rhs = Multivector::scalar(-3) + q * Rational(2);
    out.push_back(check("c", "*Q . *Q = -3 + 2Q", lhs == rhs, lhs == rhs ? "" : to_string(lhs)));
  }

  {
    bool ok = true;
    for (int a = 1; a <= kDim && ok; ++a) {
      const Multivector v = Multivector::e(a);
      const Multivector jv = vector_from(j, a - 1);
      const Multivector re = contract(v, p) + contract(jv, hodge(p));
      const Multivector im = contract(v, hodge(p)) - contract(jv, p);
      ok = re.is_zero() && im.is_zero();
    }
    out.push_back(check("d", "(v - iJv) _| (P + i*P) = 0 for every basis vector v", ok));
  }

  {
    bool ok = true;
    for (int a = 0; a < kDim && ok; ++a)
      for (int b = 0; b < kDim && ok; ++b) {
        const RationalMatrix x = rep.gamma[a], y = rep.gamma[b];
        const RationalMatrix ax = x * mp + mp * x, ay = y * mp + mp * y;
        const Rational value = trace_of_product(ax, ay) * Rational(-1, 32);
        ok = value == (a == b ? 2 : 0);
      }
    out.push_back(check("e", "-(1/32) Tr({X,P}{Y,P}) = 2 g(X,Y)", ok));
  }

  {
    bool ok = true;
    std::vector<Multivector> inputs;
    for (int a = 1; a <= kDim; ++a)
      inputs.push_back(Multivector::e(a));
    for (int s = 0; s < 4; ++s)
      inputs.push_back(sampler.form(1));
    for (const auto &eps : inputs) {
      Multivector sum;
      for (int a = 1; a <= kDim; ++a)
        sum += clifford(clifford(Multivector::e(a), eps), Multivector::e(a));
      ok = ok && sum == eps * Rational(4);
    }
    out.push_back(check("f", "sum_a e^a . eps . e^a = 4 eps for one-forms eps", ok));
  }

  {
    bool ok = true;
    std::vector<Multivector> inputs{p, hodge(p)};
    for (int s = 0; s < 4; ++s)
      inputs.push_back(sampler.form(3));
    for (const auto &alpha : inputs) {
      Multivector rhs = Multivector::scalar(alpha.norm2());
      for (int a = 1; a <= kDim; ++a) {
        const Multivector c = contract(Multivector::e(a), alpha);
        rhs -= wedge(c, c);
      }
      ok = ok && clifford(alpha, alpha) == rhs;
    }
    out.push_back(check("g", "a . a = |a|^2 - sum_a (e^a _| a) ^ (e^a _| a) for three-forms a", ok));
  }

  {
    Rational sum = 0;
    for (int a = 1; a <= kDim; ++a)
      sum += contract(Multivector::e(a), p).norm2();
    const bool ok = sum == 3 * p.norm2();
    out.push_back(check("h", "sum_a |e^a _| P|^2 = 3 |P|^2", ok,
                        "sum = " + to_string(sum) + ", |P|^2 = " + to_string(p.norm2())));
  }
  return out;
}

std::vector<CheckResult> verify_identity_suite(const CliffordRep &rep, const Spinor &psi) {
  auto results = run_identity_suite(rep, psi);
  for (const auto &r : results)
    if (!r.passed)
      throw IdentityViolation("check (" + r.id + ") failed: " + r.description +
                              (r.detail.empty() ? "" : " [" + r.detail + "]"));
  return results;
}

} // namespace nk
