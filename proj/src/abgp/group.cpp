#include "cocat/abgp/group.hpp"

#include <sstream>

#include "cocat/abgp/normal_form.hpp"
#include "cocat/core/error.hpp"

namespace cocat::abgp {

FgAbGroup::FgAbGroup(std::size_t generators, IntMatrix relations) : gens_(generators) {
  if (relations.rows() != generators && !(relations.cols() == 0 && relations.rows() == 0))
    throw Error(ErrorKind::TypeMismatch, "relations matrix must have one row per generator");
  rel_ = relations.rows() == generators ? relations.nonzero_cols() : IntMatrix(generators, 0);
}

FgAbGroup FgAbGroup::free(std::size_t rank) { return FgAbGroup(rank, IntMatrix(rank, 0)); }

bool FgAbGroup::is_zero(const std::vector<BigInt>& v) const {
  if (v.size() != gens_) throw Error(ErrorKind::TypeMismatch, "element has the wrong length");
  bool all_zero = true;
  for (const auto& x : v) all_zero = all_zero && x == 0;
  if (all_zero) return true;
  if (rel_.cols() == 0) return false;
  return in_column_lattice(rel_, v);
}

bool FgAbGroup::columns_vanish(const IntMatrix& m) const {
  if (m.rows() != gens_) throw Error(ErrorKind::TypeMismatch, "columns have the wrong length");
  if (m.is_zero()) return true;
  if (rel_.cols() == 0) return false;
  const HermiteForm hf = hnf(rel_);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!solve_hermite(hf, m.col(c))) return false;
  return true;
}

std::vector<BigInt> FgAbGroup::invariants() const { return cokernel(rel_); }

bool operator==(const FgAbGroup& a, const FgAbGroup& b) {
  if (a.gens_ != b.gens_) return false;
  return a.columns_vanish(b.rel_) && b.columns_vanish(a.rel_);
}

std::string to_string(const FgAbGroup& g) {
  std::ostringstream os;
  os << "Z^" << g.generators();
  if (!g.is_free_presentation()) os << " / " << to_string(g.relations());
  return os.str();
}

AbMap::AbMap(FgAbGroup dom, FgAbGroup cod, IntMatrix matrix)
    : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(matrix)) {
  if (m_.rows() != cod_.generators() || m_.cols() != dom_.generators())
    throw Error(ErrorKind::TypeMismatch, "map matrix is " + std::to_string(m_.rows()) + "x" +
                                             std::to_string(m_.cols()) + ", expected " +
                                             std::to_string(cod_.generators()) + "x" +
                                             std::to_string(dom_.generators()));
  if (!cod_.columns_vanish(m_ * dom_.relations()))
    throw Error(ErrorKind::InvalidArgument, "map is not well defined on the domain relations");
}

AbMap AbMap::identity(const FgAbGroup& g) { return AbMap(g, g, IntMatrix::identity(g.generators())); }

AbMap AbMap::zero(const FgAbGroup& dom, const FgAbGroup& cod) {
  return AbMap(dom, cod, IntMatrix(cod.generators(), dom.generators()));
}

AbMap compose(const AbMap& g, const AbMap& f) {
  if (!(f.cod() == g.dom())) throw Error(ErrorKind::TypeMismatch, "composite of non-composable maps");
  return AbMap(f.dom(), g.cod(), g.matrix() * f.matrix());
}

bool equal_maps(const AbMap& f, const AbMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) return false;
  return f.cod().columns_vanish(f.matrix() - g.matrix());
}

std::string to_string(const AbMap& f) { return to_string(f.matrix()); }

Presentation simplify(const FgAbGroup& g) {
  const std::size_t n = g.generators();
  IntMatrix rel = g.relations();
  IntMatrix to = IntMatrix::identity(n);    // current gens x original gens
  IntMatrix from = IntMatrix::identity(n);  // original gens x current gens
  while (true) {
    std::size_t col = rel.cols(), gen = rel.rows();
    for (std::size_t c = 0; c < rel.cols() && col == rel.cols(); ++c)
      for (std::size_t j = rel.rows(); j-- > 0;)
        if (rel(j, c) == 1 || rel(j, c) == -1) {
          col = c;
          gen = j;
          break;
        }
    if (col == rel.cols()) break;
    // gen = -sign * (sum of the other terms of relator col)
    const std::size_t m = rel.rows();
    const BigInt sign = rel(gen, col);
    IntMatrix proj(m - 1, m);  // current -> reduced
    IntMatrix sect(m, m - 1);  // reduced -> current
    for (std::size_t k = 0, t = 0; k < m; ++k) {
      if (k == gen) continue;
      proj(t, k) = 1;
      sect(k, t) = 1;
      proj(t, gen) = -sign * rel(k, col);
      ++t;
    }
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < rel.cols(); ++c)
      if (c != col) keep.push_back(c);
    rel = (proj * rel.select_cols(keep)).nonzero_cols();
    to = proj * to;
    from = from * sect;
  }
  return {FgAbGroup(rel.rows(), rel), to, from};
}

Presentation free_presentation(const FgAbGroup& g) {
  Presentation p = simplify(g);
  if (p.group.is_free_presentation()) return p;
  const SmithForm sf = snf(p.group.relations());
  const auto diag = sf.diagonal();
  std::size_t rank = 0;
  for (const auto& d : diag) {
    if (d == 0) break;
    if (d != 1) throw Error(ErrorKind::NotFree, "group has torsion " + d.get_str());
    ++rank;
  }
  const std::size_t m = p.group.generators();
  std::vector<std::size_t> tail;
  for (std::size_t k = rank; k < m; ++k) tail.push_back(k);
  const IntMatrix proj = sf.u.select_rows(tail);
  const IntMatrix sect = unimodular_inverse(sf.u).select_cols(tail);
  return {FgAbGroup::free(tail.size()), proj * p.to, p.from * sect};
}

}  // namespace cocat::abgp
