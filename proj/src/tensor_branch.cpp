#include "nk/tensor_branch.hpp"

#include "nk/errors.hpp"

namespace nk {

RepDecomposition::RepDecomposition(RootData algebra, std::map<Weight, std::int64_t> entries)
    : algebra_(std::move(algebra)) {
  for (const auto &[hw, m] : entries)
    add(hw, m);
}

std::int64_t RepDecomposition::multiplicity(const Weight &hw) const {
  auto it = entries_.find(hw);
  return it == entries_.end() ? 0 : it->second;
}

void RepDecomposition::add(const Weight &hw, std::int64_t k) {
  if (k < 0)
    throw PreconditionError("negative multiplicity");
  if (k == 0)
    return;
  algebra_.require_dominant(hw);
  entries_[hw] += k;
}

void RepDecomposition::remove(const Weight &hw, std::int64_t k) {
  auto it = entries_.find(hw);
  if (it == entries_.end() || it->second < k)
    throw PreconditionError("cannot remove " + std::to_string(k) + " copies of V" +
                            to_string(hw));
  it->second -= k;
  if (it->second == 0)
    entries_.erase(it);
}

RepDecomposition &RepDecomposition::operator+=(const RepDecomposition &o) {
  if (!(algebra_ == o.algebra_))
    throw PreconditionError("decomposition algebra mismatch");
  for (const auto &[hw, m] : o.entries_)
    add(hw, m);
  return *this;
}

std::int64_t RepDecomposition::dimension() const {
  std::int64_t d = 0;
  for (const auto &[hw, m] : entries_)
    d += m * weyl_dimension(algebra_, hw).get_si();
  return d;
}

WeightCharacter RepDecomposition::character() const {
  WeightCharacter c(algebra_);
  for (const auto &[hw, m] : entries_)
    c += weight_multiplicities(algebra_, hw).scaled(m);
  return c;
}

std::string to_string(const RepDecomposition &d) {
  if (d.empty())
    return "0";
  std::string s;
  for (const auto &[hw, m] : d.entries()) {
    if (!s.empty())
      s += " + ";
    if (m != 1)
      s += std::to_string(m);
    s += "V" + to_string(hw);
  }
  return s;
}

RestrictionMap::RestrictionMap(RootData source, RootData target, RationalMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.coordinate_count() || matrix_.cols() != source_.coordinate_count())
    throw MalformedEmbeddingError("restriction matrix is " + std::to_string(matrix_.rows()) + "x" +
                                  std::to_string(matrix_.cols()) + ", expected " +
                                  std::to_string(target_.coordinate_count()) + "x" +
                                  std::to_string(source_.coordinate_count()));
}

Weight RestrictionMap::apply(const Weight &w) const {
  source_.require_weight(w);
  std::vector<int> out(matrix_.rows(), 0);
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
      s += matrix_(i, j) * w[j];
    if (!is_integer(s))
      throw MalformedEmbeddingError("restriction of " + to_string(w) +
                                    " is not an integral weight");
    out[i] = static_cast<int>(s.get_num().get_si());
  }
  return Weight(std::move(out));
}

WeightCharacter RestrictionMap::apply(const WeightCharacter &c) const {
  if (!(c.algebra() == source_))
    throw PreconditionError("character does not live over the restriction source");
  WeightCharacter out(target_);
  for (const auto &[w, m] : c.entries())
    out.add(apply(w), m);
  return out;
}

RepDecomposition peel_off(const WeightCharacter &c) {
  const RootData &rd = c.algebra();
  WeightCharacter rest = c;
  RepDecomposition out(rd);
  std::map<Weight, WeightCharacter> memo;
  while (!rest.empty()) {
    const Weight *best = nullptr;
    Rational best_height;
    for (const auto &[w, m] : rest.entries()) {
      if (m < 0)
        throw NotACharacterError("negative multiplicity at " + to_string(w));
      const Rational h = rd.height(w);
      if (!best || h > best_height || (h == best_height && w > *best)) {
        best = &w;
        best_height = h;
      }
    }
    const Weight hw = *best;
    const std::int64_t m = rest.multiplicity(hw);
    if (!rd.is_dominant(hw))
      throw NotACharacterError("highest remaining weight " + to_string(hw) + " is not dominant");
    auto it = memo.find(hw);
    if (it == memo.end())
      it = memo.emplace(hw, weight_multiplicities(rd, hw)).first;
    rest -= it->second.scaled(m);
    out.add(hw, m);
  }
  return out;
}

RepDecomposition tensor_decompose(const RootData &algebra, const Weight &a, const Weight &b) {
  const auto ca = weight_multiplicities(algebra, a);
  const auto cb = weight_multiplicities(algebra, b);
  RepDecomposition out = peel_off(ca * cb);
  if (out.dimension() != ca.total() * cb.total())
    throw ConsistencyError("tensor product does not conserve dimension");
  return out;
}

RepDecomposition tensor_decompose(const RepDecomposition &a, const RepDecomposition &b) {
  if (!(a.algebra() == b.algebra()))
    throw PreconditionError("decomposition algebra mismatch");
  RepDecomposition out(a.algebra());
  for (const auto &[ha, ma] : a.entries())
    for (const auto &[hb, mb] : b.entries()) {
      const auto part = tensor_decompose(a.algebra(), ha, hb);
      for (const auto &[h, m] : part.entries())
        out.add(h, m * ma * mb);
    }
  return out;
}

RepDecomposition branch(const RestrictionMap &map, const Weight &hw) {
  const auto c = weight_multiplicities(map.source(), hw);
  RepDecomposition out = peel_off(map.apply(c));
  if (out.dimension() != c.total())
    throw ConsistencyError("branching does not conserve dimension");
  return out;
}

RepDecomposition branch(const RestrictionMap &map, const RepDecomposition &d) {
  RepDecomposition out(map.target());
  for (const auto &[hw, m] : d.entries()) {
    const RepDecomposition part = branch(map, hw);
    for (const auto &[h, k] : part.entries())
      out.add(h, k * m);
  }
  return out;
}

} // namespace nk
