#include "nk/lie_core.hpp"

#include "nk/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace nk {

// ---------------------------------------------------------------------------
// Weight

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

Weight &Weight::operator+=(const Weight &o) {
  if (o.size() != size())
    throw PreconditionError("weight size mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    coords_[i] += o.coords_[i];
  return *this;
}

Weight &Weight::operator-=(const Weight &o) {
  if (o.size() != size())
    throw PreconditionError("weight size mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    coords_[i] -= o.coords_[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto &c : a.coords_)
    c = -c;
  return a;
}

Weight operator*(int k, Weight a) {
  for (auto &c : a.coords_)
    c *= k;
  return a;
}

std::string to_string(const Weight &w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

std::ostream &operator<<(std::ostream &os, const Weight &w) { return os << to_string(w); }

// ---------------------------------------------------------------------------
// SimpleFactor

namespace {

using IntVec = std::vector<int>;

int pairing_with_coroot(const IntVec &root_coords, const std::vector<std::vector<int>> &cartan,
                        std::size_t i) {
  // <beta, alpha_i^vee> for beta = sum_j c_j alpha_j.
  int s = 0;
  for (std::size_t j = 0; j < root_coords.size(); ++j)
    s += root_coords[j] * cartan[j][i];
  return s;
}

} // namespace

SimpleFactor::SimpleFactor(FactorKind kind, std::vector<std::vector<int>> cartan)
    : kind_(kind), cartan_(std::move(cartan)) {
  const std::size_t n = cartan_.size();
  if (n == 0 || kind_ == FactorKind::U1)
    throw PreconditionError("simple factor needs a non-empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan_[i].size() != n)
      throw PreconditionError("Cartan matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && cartan_[i][j] != 2)
        throw PreconditionError("Cartan matrix diagonal must be 2");
      if (i != j && cartan_[i][j] > 0)
        throw PreconditionError("Cartan matrix off-diagonal entries must be non-positive");
      if (i != j && (cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw PreconditionError("Cartan matrix zero pattern must be symmetric");
    }
  }

  // Squared lengths from (alpha_j,alpha_j) A(i,j) = (alpha_i,alpha_i) A(j,i).
  std::vector<std::optional<Rational>> len(n);
  len[0] = Rational(1);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || cartan_[i][j] == 0)
        continue;
      Rational lj = *len[i] * cartan_[j][i] / cartan_[i][j];
      if (!len[j]) {
        len[j] = lj;
        queue.push_back(j);
      } else if (*len[j] != lj) {
        throw PreconditionError("Cartan matrix is not symmetrizable");
      }
    }
  }
  Rational shortest = 0;
  for (const auto &l : len) {
    if (!l)
      throw PreconditionError("Dynkin diagram of a simple factor must be connected");
    if (shortest == 0 || *l < shortest)
      shortest = *l;
  }
  for (const auto &l : len)
    root_lengths_.push_back(*l * 2 / shortest);

  // Positive roots by height via root strings.
  std::set<IntVec> seen;
  std::vector<IntVec> level;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    level.push_back(e);
    seen.insert(e);
  }
  while (!level.empty()) {
    positive_roots_.insert(positive_roots_.end(), level.begin(), level.end());
    std::set<IntVec> next;
    for (const auto &beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        for (;;) {
          IntVec down = beta;
          down[i] -= p + 1;
          if (down[i] < 0 || !seen.count(down))
            break;
          ++p;
        }
        const int q = p - pairing_with_coroot(beta, cartan_, i);
        if (q > 0) {
          IntVec up = beta;
          up[i] += 1;
          if (!seen.count(up))
            next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    seen.insert(next.begin(), next.end());
  }

  for (const auto &c : positive_roots_) {
    Weight f = Weight::zero(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        f[k] += c[j] * cartan_[j][k];
    positive_roots_fund_.push_back(f);

    // (alpha, alpha) with (alpha_j, alpha_k) = A(j,k) (alpha_k,alpha_k) / 2.
    Rational norm = 0;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        norm += Rational(c[j] * c[k] * cartan_[j][k]) * root_lengths_[k] / 2;
    IntVec coroot(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      Rational cj = Rational(c[j]) * root_lengths_[j] / norm;
      if (!is_integer(cj))
        throw ConsistencyError("non-integral coroot coordinate");
      coroot[j] = static_cast<int>(cj.get_num().get_si());
    }
    positive_coroots_.push_back(coroot);
  }

  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = cartan_[i][j];
  const RationalMatrix a_inv = inverse(a);
  fund_to_root_ = a_inv.transpose();
  std::vector<Rational> half_len;
  for (const auto &l : root_lengths_)
    half_len.push_back(l / 2);
  default_gram_ = RationalMatrix::diagonal(half_len) * a_inv.transpose();
  if (!default_gram_.is_symmetric())
    throw ConsistencyError("default form on fundamental weights is not symmetric");
}

std::string SimpleFactor::name() const {
  switch (kind_) {
  case FactorKind::A:
    return "A" + std::to_string(rank());
  case FactorKind::C:
    return "C" + std::to_string(rank());
  case FactorKind::G:
    return "G" + std::to_string(rank());
  case FactorKind::U1:
    break;
  }
  return "U1";
}

Weight SimpleFactor::highest_root() const { return positive_roots_fund_.back(); }

SimpleFactor type_a(std::size_t n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n)
      c[i][i + 1] = c[i + 1][i] = -1;
  }
  return SimpleFactor(FactorKind::A, c);
}

SimpleFactor type_c2() { return SimpleFactor(FactorKind::C, {{2, -2}, {-1, 2}}); }

SimpleFactor type_g2() { return SimpleFactor(FactorKind::G, {{2, -1}, {-3, 2}}); }

// ---------------------------------------------------------------------------
// Factor / RootData

Factor Factor::simple(SimpleFactor f) {
  Factor out;
  out.simple_ = std::make_shared<const SimpleFactor>(std::move(f));
  return out;
}

Factor Factor::u1() { return Factor{}; }

const SimpleFactor &Factor::simple_factor() const {
  if (!simple_)
    throw PreconditionError("u(1) factor has no root system");
  return *simple_;
}

bool operator==(const Factor &a, const Factor &b) {
  if (a.is_abelian() || b.is_abelian())
    return a.is_abelian() == b.is_abelian();
  return *a.simple_ == *b.simple_;
}

RootData::RootData(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (const auto &f : factors_) {
    offsets_.push_back(coordinate_count_);
    coordinate_count_ += f.coordinate_count();
  }
}

std::size_t RootData::simple_rank() const {
  std::size_t r = 0;
  for (const auto &f : factors_)
    if (!f.is_abelian())
      r += f.simple_factor().rank();
  return r;
}

std::string RootData::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    s += (i ? "x" : "") + factors_[i].name();
  return s.empty() ? "trivial" : s;
}

std::size_t RootData::dimension() const {
  std::size_t d = 0;
  for (const auto &f : factors_)
    d += f.is_abelian() ? 1 : f.simple_factor().dimension();
  return d;
}

void RootData::require_weight(const Weight &w) const {
  if (w.size() != coordinate_count_)
    throw PreconditionError("weight " + to_string(w) + " has " + std::to_string(w.size()) +
                            " coordinates; " + name() + " needs " +
                            std::to_string(coordinate_count_));
}

bool RootData::is_dominant(const Weight &w) const {
  require_weight(w);
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (factors_[f].is_abelian())
      continue;
    for (std::size_t j = 0; j < factors_[f].coordinate_count(); ++j)
      if (w[offsets_[f] + j] < 0)
        return false;
  }
  return true;
}

void RootData::require_dominant(const Weight &w) const {
  if (!is_dominant(w))
    throw PreconditionError("weight " + to_string(w) + " is not dominant for " + name());
}

std::vector<std::pair<std::size_t, std::size_t>> RootData::simple_root_indices() const {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t f = 0; f < factors_.size(); ++f)
    if (!factors_[f].is_abelian())
      for (std::size_t j = 0; j < factors_[f].coordinate_count(); ++j)
        idx.emplace_back(f, j);
  return idx;
}

Weight RootData::reflect(const Weight &w, std::size_t simple_index) const {
  require_weight(w);
  const auto idx = simple_root_indices();
  if (simple_index >= idx.size())
    throw PreconditionError("simple root index out of range");
  const auto [f, j] = idx[simple_index];
  const auto &sf = factors_[f].simple_factor();
  const std::size_t off = offsets_[f];
  const int c = w[off + j];
  Weight out = w;
  for (std::size_t k = 0; k < sf.rank(); ++k)
    out[off + k] -= c * sf.cartan()[j][k];
  return out;
}

Rational RootData::height(const Weight &w) const {
  require_weight(w);
  Rational h = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (factors_[f].is_abelian())
      continue;
    const auto &m = factors_[f].simple_factor().fund_to_root();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        h += m(i, j) * w[offsets_[f] + j];
  }
  return h;
}

std::map<Weight, std::int64_t> RootData::adjoint_components() const {
  std::map<Weight, std::int64_t> out;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    Weight w = Weight::zero(coordinate_count_);
    if (!factors_[f].is_abelian()) {
      const Weight hr = factors_[f].simple_factor().highest_root();
      for (std::size_t j = 0; j < hr.size(); ++j)
        w[offsets_[f] + j] = hr[j];
    }
    out[w] += 1;
  }
  return out;
}

RootData algebra_a1() { return RootData({Factor::simple(type_a(1))}); }
RootData algebra_a2() { return RootData({Factor::simple(type_a(2))}); }
RootData algebra_c2() { return RootData({Factor::simple(type_c2())}); }
RootData algebra_g2() { return RootData({Factor::simple(type_g2())}); }
RootData algebra_a1_cubed() {
  return RootData({Factor::simple(type_a(1)), Factor::simple(type_a(1)), Factor::simple(type_a(1))});
}
RootData algebra_a1_u1() { return RootData({Factor::simple(type_a(1)), Factor::u1()}); }
RootData algebra_u1_squared() { return RootData({Factor::u1(), Factor::u1()}); }

// ---------------------------------------------------------------------------
// WeightCharacter

std::int64_t WeightCharacter::multiplicity(const Weight &w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t WeightCharacter::total() const {
  std::int64_t t = 0;
  for (const auto &[w, m] : entries_)
    t += m;
  return t;
}

void WeightCharacter::add(const Weight &w, std::int64_t k) {
  if (k == 0)
    return;
  algebra_.require_weight(w);
  auto [it, inserted] = entries_.try_emplace(w, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0)
      entries_.erase(it);
  }
}

WeightCharacter &WeightCharacter::operator+=(const WeightCharacter &o) {
  if (!(algebra_ == o.algebra_))
    throw PreconditionError("character algebra mismatch");
  for (const auto &[w, m] : o.entries_)
    add(w, m);
  return *this;
}

WeightCharacter &WeightCharacter::operator-=(const WeightCharacter &o) {
  if (!(algebra_ == o.algebra_))
    throw PreconditionError("character algebra mismatch");
  for (const auto &[w, m] : o.entries_)
    add(w, -m);
  return *this;
}

WeightCharacter WeightCharacter::scaled(std::int64_t k) const {
  WeightCharacter out(algebra_);
  if (k == 0)
    return out;
  for (const auto &[w, m] : entries_)
    out.entries_.emplace(w, m * k);
  return out;
}

WeightCharacter WeightCharacter::dual() const {
  WeightCharacter out(algebra_);
  for (const auto &[w, m] : entries_)
    out.entries_.emplace(-w, m);
  return out;
}

WeightCharacter operator*(const WeightCharacter &a, const WeightCharacter &b) {
  if (!(a.algebra_ == b.algebra_))
    throw PreconditionError("character algebra mismatch");
  WeightCharacter out(a.algebra_);
  for (const auto &[wa, ma] : a.entries_)
    for (const auto &[wb, mb] : b.entries_)
      out.add(wa + wb, ma * mb);
  return out;
}

// ---------------------------------------------------------------------------
// Freudenthal recursion

namespace {

// Integer-scaled copy of a positive-definite Gram matrix on fundamental weights.
struct IntegerForm {
  std::vector<std::vector<std::int64_t>> g;

  explicit IntegerForm(const RationalMatrix &gram) {
    if (!gram.is_symmetric())
      throw PreconditionError("invariant form must be symmetric");
    Integer l = 1;
    for (std::size_t i = 0; i < gram.rows(); ++i)
      for (std::size_t j = 0; j < gram.cols(); ++j)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), gram(i, j).get_den().get_mpz_t());
    g.assign(gram.rows(), std::vector<std::int64_t>(gram.cols(), 0));
    for (std::size_t i = 0; i < gram.rows(); ++i)
      for (std::size_t j = 0; j < gram.cols(); ++j) {
        Rational v = gram(i, j) * l;
        g[i][j] = v.get_num().get_si();
      }
  }

  std::int64_t operator()(const Weight &a, const Weight &b) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        s += static_cast<std::int64_t>(a[i]) * g[i][j] * b[j];
    return s;
  }
};

int coroot_pairing(const Weight &mu, const std::vector<int> &coroot) {
  int s = 0;
  for (std::size_t j = 0; j < coroot.size(); ++j)
    s += mu[j] * coroot[j];
  return s;
}

std::map<Weight, std::int64_t> simple_character(const SimpleFactor &f, const Weight &hw,
                                                const RationalMatrix &gram) {
  const std::size_t n = f.rank();
  const IntegerForm form(gram);
  const auto &roots = f.positive_roots_fund();
  const auto &coroots = f.positive_coroots();

  // Saturated closure of {hw} under root strings equals the weight system.
  std::set<Weight> support{hw};
  std::deque<Weight> queue{hw};
  while (!queue.empty()) {
    const Weight mu = queue.front();
    queue.pop_front();
    for (std::size_t r = 0; r < roots.size(); ++r) {
      const int p = coroot_pairing(mu, coroots[r]);
      Weight step = p > 0 ? roots[r] : -roots[r];
      Weight nu = mu;
      for (int i = 0; i < std::abs(p); ++i) {
        nu -= step;
        if (support.insert(nu).second)
          queue.push_back(nu);
      }
    }
  }

  const Weight delta(std::vector<int>(n, 1));
  std::vector<Weight> order(support.begin(), support.end());
  std::vector<std::int64_t> level(order.size());
  std::map<Weight, std::int64_t> level_of;
  for (const auto &w : order)
    level_of[w] = form(w, delta);
  std::sort(order.begin(), order.end(), [&](const Weight &a, const Weight &b) {
    const auto la = level_of[a], lb = level_of[b];
    return la != lb ? la > lb : a > b;
  });

  const Weight hd = hw + delta;
  const std::int64_t top = form(hd, hd);
  std::map<Weight, std::int64_t> mult;
  for (const auto &mu : order) {
    if (mu == hw) {
      mult[mu] = 1;
      continue;
    }
    std::int64_t num = 0;
    for (const auto &alpha : roots) {
      Weight nu = mu + alpha;
      for (;;) {
        auto it = mult.find(nu);
        if (it == mult.end())
          break;
        num += it->second * form(nu, alpha);
        nu += alpha;
      }
    }
    num *= 2;
    const Weight md = mu + delta;
    const std::int64_t den = top - form(md, md);
    if (den <= 0 || num % den != 0)
      throw ConsistencyError("Freudenthal recursion produced a non-integral multiplicity at " +
                             to_string(mu));
    const std::int64_t m = num / den;
    if (m <= 0)
      throw ConsistencyError("Freudenthal recursion produced a non-positive multiplicity at " +
                             to_string(mu));
    mult[mu] = m;
  }
  return mult;
}

} // namespace

WeightCharacter weight_multiplicities(const RootData &root_data, const Weight &hw,
                                      const FactorForms &forms) {
  root_data.require_dominant(hw);
  std::map<Weight, std::int64_t> acc{{Weight{}, 1}};
  const auto &factors = root_data.factors();
  for (std::size_t f = 0; f < factors.size(); ++f) {
    std::map<Weight, std::int64_t> local;
    if (factors[f].is_abelian()) {
      local[Weight{hw[root_data.offset(f)]}] = 1;
    } else {
      const auto &sf = factors[f].simple_factor();
      std::vector<int> block(hw.coords().begin() + static_cast<std::ptrdiff_t>(root_data.offset(f)),
                             hw.coords().begin() +
                                 static_cast<std::ptrdiff_t>(root_data.offset(f) + sf.rank()));
      const RationalMatrix &gram =
          (f < forms.size() && forms[f]) ? *forms[f] : sf.default_gram();
      if (gram.rows() != sf.rank())
        throw PreconditionError("form size does not match factor rank");
      local = simple_character(sf, Weight(block), gram);
    }
    std::map<Weight, std::int64_t> next;
    for (const auto &[a, ma] : acc)
      for (const auto &[b, mb] : local) {
        std::vector<int> c = a.coords();
        c.insert(c.end(), b.coords().begin(), b.coords().end());
        next[Weight(std::move(c))] += ma * mb;
      }
    acc = std::move(next);
  }
  WeightCharacter out(root_data);
  for (const auto &[w, m] : acc)
    out.add(w, m);
  return out;
}

Integer weyl_dimension(const RootData &root_data, const Weight &hw) {
  root_data.require_dominant(hw);
  Rational d = 1;
  const auto &factors = root_data.factors();
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (factors[f].is_abelian())
      continue;
    const auto &sf = factors[f].simple_factor();
    const std::size_t off = root_data.offset(f);
    for (const auto &coroot : sf.positive_coroots()) {
      int num = 0, den = 0;
      for (std::size_t j = 0; j < coroot.size(); ++j) {
        num += (hw[off + j] + 1) * coroot[j];
        den += coroot[j];
      }
      Rational factor(num, den);
      factor.canonicalize();
      d *= factor;
    }
  }
  if (!is_integer(d))
    throw ConsistencyError("Weyl dimension formula gave a non-integer");
  return d.get_num();
}

std::int64_t dimension(const RootData &root_data, const Weight &hw) {
  const Integer weyl = weyl_dimension(root_data, hw);
  const std::int64_t counted = weight_multiplicities(root_data, hw).total();
  if (weyl != counted)
    throw ConsistencyError("dimension mismatch for " + to_string(hw) + ": weight count " +
                           std::to_string(counted) + " vs Weyl formula " + weyl.get_str());
  return counted;
}

std::vector<Weight> dominant_weights_in_box(const RootData &root_data, int bound) {
  if (bound < 0)
    throw PreconditionError("bound must be non-negative");
  const std::size_t n = root_data.coordinate_count();
  std::vector<int> lo(n, 0), hi(n, bound);
  const auto &factors = root_data.factors();
  for (std::size_t f = 0; f < factors.size(); ++f)
    if (factors[f].is_abelian())
      lo[root_data.offset(f)] = -bound;
  std::vector<Weight> out;
  std::vector<int> cur = lo;
  for (;;) {
    out.emplace_back(cur);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (cur[k] < hi[k]) {
        ++cur[k];
        break;
      }
      cur[k] = lo[k];
      if (k == 0)
        return out;
    }
    if (n == 0)
      return out;
  }
}

} // namespace nk
