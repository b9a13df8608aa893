#include "cocat/abgp/linear_system.hpp"

#include "cocat/abgp/normal_form.hpp"
#include "cocat/core/error.hpp"

namespace cocat::abgp {

std::size_t LinearSystem::add_unknown(std::size_t rows, std::size_t cols) {
  offset_.push_back(variable_count());
  shapes_.emplace_back(rows, cols);
  return shapes_.size() - 1;
}

void LinearSystem::add_equation(std::vector<Term> terms, const IntMatrix& rhs) {
  for (const auto& t : terms) {
    if (t.unknown >= shapes_.size()) throw Error(ErrorKind::InvalidArgument, "unknown id out of range");
    const auto [r, c] = shapes_[t.unknown];
    if (t.left.cols() != r || t.right.rows() != c || t.left.rows() != rhs.rows() ||
        t.right.cols() != rhs.cols())
      throw Error(ErrorKind::TypeMismatch, "linear system term has the wrong shape");
  }
  equations_.push_back({std::move(terms), rhs});
}

void LinearSystem::add_congruence(std::vector<Term> terms, const IntMatrix& rhs, const IntMatrix& modulus) {
  if (modulus.rows() != rhs.rows()) throw Error(ErrorKind::TypeMismatch, "modulus has the wrong row count");
  if (modulus.cols() > 0) {
    const std::size_t slack = add_unknown(modulus.cols(), rhs.cols());
    terms.push_back({-modulus, slack, IntMatrix::identity(rhs.cols())});
  }
  add_equation(std::move(terms), rhs);
}

IntMatrix LinearSystem::assemble(std::vector<BigInt>* rhs) const {
  std::size_t rows = 0;
  for (const auto& e : equations_) rows += e.rhs.rows() * e.rhs.cols();
  IntMatrix m(rows, variable_count());
  if (rhs) rhs->assign(rows, BigInt(0));
  std::size_t base = 0;
  for (const auto& e : equations_) {
    for (const auto& t : e.terms) {
      const IntMatrix block = kron(t.right.transpose(), t.left);
      const std::size_t off = offset_[t.unknown];
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
          if (block(i, j) != 0) m(base + i, off + j) += block(i, j);
    }
    if (rhs)
      for (std::size_t c = 0; c < e.rhs.cols(); ++c)
        for (std::size_t r = 0; r < e.rhs.rows(); ++r) (*rhs)[base + c * e.rhs.rows() + r] = e.rhs(r, c);
    base += e.rhs.rows() * e.rhs.cols();
  }
  return m;
}

IntMatrix LinearSystem::unflatten(const std::vector<BigInt>& x, std::size_t u) const {
  const auto [r, c] = shapes_[u];
  IntMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t i = 0; i < r; ++i) m(i, j) = x[offset_[u] + j * r + i];
  return m;
}

std::optional<std::vector<IntMatrix>> LinearSystem::solve() const {
  std::vector<BigInt> rhs;
  const IntMatrix m = assemble(&rhs);
  auto x = abgp::solve(m, rhs);
  if (!x) return std::nullopt;
  std::vector<IntMatrix> out;
  for (std::size_t u = 0; u < shapes_.size(); ++u) out.push_back(unflatten(*x, u));
  return out;
}

std::vector<IntMatrix> LinearSystem::homogeneous_part(std::size_t unknown) const {
  const IntMatrix k = kernel_basis(assemble(nullptr));
  std::vector<IntMatrix> out;
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(unflatten(k.col(c), unknown));
  return out;
}

}  // namespace cocat::abgp
