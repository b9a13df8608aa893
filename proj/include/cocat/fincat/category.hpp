#pragma once

// Finite categories given by composition tables, and functors between them.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cocat::fincat {

struct Arrow {
  std::size_t src = 0;
  std::size_t tgt = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// Objects are 0..objects-1, morphisms 0..arrows-1.  table[g * n + f] is the
/// index of g . f when tgt(f) == src(g), and kNone otherwise.
struct CategoryTable {
  std::size_t objects = 0;
  std::vector<Arrow> arrows;
  std::vector<std::size_t> identities;
  std::vector<std::size_t> table;
  std::vector<std::string> names;  // optional labels, one per morphism
};

/// Empty when the table describes a category, else the first violated law.
std::optional<std::string> validation_error(const CategoryTable& t);

class FinCategory {
 public:
  FinCategory();
  /// Throws NonComposable when the table breaks a category law.
  explicit FinCategory(CategoryTable t);

  static FinCategory terminal();
  /// 0 -> 1 with the non-identity arrow named a.
  static FinCategory arrow();
  static FinCategory discrete(std::size_t n);
  /// Free category on a directed acyclic multigraph; edges must satisfy
  /// src < tgt.  Morphisms: identities, then paths by (length, edge list).
  static FinCategory free_on_dag(std::size_t objects, const std::vector<Arrow>& edges);

  std::size_t objects() const { return t_->objects; }
  std::size_t morphisms() const { return t_->arrows.size(); }
  std::size_t src(std::size_t m) const { return t_->arrows[m].src; }
  std::size_t tgt(std::size_t m) const { return t_->arrows[m].tgt; }
  std::size_t identity(std::size_t obj) const { return t_->identities[obj]; }
  bool is_identity(std::size_t m) const { return t_->identities[src(m)] == m; }
  /// g . f, or kNone when not composable.
  std::size_t try_compose(std::size_t g, std::size_t f) const { return t_->table[g * morphisms() + f]; }
  /// g . f; throws NonComposable.
  std::size_t compose(std::size_t g, std::size_t f) const;
  const std::string& name(std::size_t m) const { return t_->names[m]; }
  const CategoryTable& table() const { return *t_; }

  friend bool operator==(const FinCategory& a, const FinCategory& b);

 private:
  std::shared_ptr<const CategoryTable> t_;
};

/// Category laws, checked exhaustively.
bool validate(const FinCategory& c);
std::string to_string(const FinCategory& c);

class Functor {
 public:
  Functor() = default;
  /// Throws InvalidArgument unless the assignment is functorial.
  Functor(FinCategory dom, FinCategory cod, std::vector<std::size_t> on_objects,
          std::vector<std::size_t> on_morphisms);
  static Functor identity(const FinCategory& c);

  const FinCategory& dom() const { return dom_; }
  const FinCategory& cod() const { return cod_; }
  std::size_t object(std::size_t o) const { return obj_[o]; }
  std::size_t morphism(std::size_t m) const { return mor_[m]; }
  const std::vector<std::size_t>& on_objects() const { return obj_; }
  const std::vector<std::size_t>& on_morphisms() const { return mor_; }

  friend bool operator==(const Functor& a, const Functor& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.obj_ == b.obj_ && a.mor_ == b.mor_;
  }

 private:
  FinCategory dom_;
  FinCategory cod_;
  std::vector<std::size_t> obj_;
  std::vector<std::size_t> mor_;
};

/// Why the assignment fails to be a functor, or empty.
std::optional<std::string> functor_error(const FinCategory& dom, const FinCategory& cod,
                                         const std::vector<std::size_t>& on_objects,
                                         const std::vector<std::size_t>& on_morphisms);

/// g . f
Functor compose(const Functor& g, const Functor& f);
std::string to_string(const Functor& f);

/// Every functor dom -> cod, by backtracking over object and morphism images.
std::vector<Functor> enumerate_functors(const FinCategory& dom, const FinCategory& cod);

}  // namespace cocat::fincat
