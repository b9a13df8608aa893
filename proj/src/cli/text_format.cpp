#include "cocat/cli/text_format.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "cocat/core/error.hpp"

namespace cocat::cli {

std::string_view host_name(Host h) noexcept {
  switch (h) {
    case Host::FinSet: return "finset";
    case Host::AbGp: return "abgp";
    case Host::Chain: return "chain";
    case Host::Cat: return "cat";
  }
  return "?";
}

Host parse_host(std::string_view name) {
  for (Host h : {Host::FinSet, Host::AbGp, Host::Chain, Host::Cat})
    if (host_name(h) == name) return h;
  throw Error(ErrorKind::ParseError,
              "field category: unknown host category '" + std::string(name) + "' (expected finset, abgp, chain or cat)");
}

Host host_of(const AnyCoCategory& d) noexcept { return static_cast<Host>(d.index()); }

namespace {

using abgp::BigInt;
using abgp::IntMatrix;

// Sizes beyond this are rejected before anything is allocated.
constexpr std::size_t kMaxCount = 1u << 16;

struct Token {
  std::string text;
  std::size_t line;
};

class Reader {
 public:
  /// Temporarily reports errors against another field.
  class Field {
   public:
    Field(Reader& rd, std::string name) : rd_(rd), saved_(std::exchange(rd.field_, std::move(name))) {}
    ~Field() { rd_.field_ = std::move(saved_); }
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

   private:
    Reader& rd_;
    std::string saved_;
  };

  explicit Reader(std::string_view text) {
    std::size_t line = 1;
    std::size_t k = 0;
    while (k < text.size()) {
      const char c = text[k];
      if (c == '\n') {
        ++line;
        ++k;
      } else if (c == '#') {
        while (k < text.size() && text[k] != '\n') ++k;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++k;
      } else {
        const std::size_t start = k;
        while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k])) && text[k] != '#') ++k;
        toks_.push_back({std::string(text.substr(start, k - start)), line});
      }
    }
    last_line_ = line;
  }

  std::size_t line() const { return pos_ < toks_.size() ? toks_[pos_].line : last_line_; }
  bool at_end() const { return pos_ == toks_.size(); }
  std::size_t remaining() const { return toks_.size() - pos_; }
  const std::string& field() const { return field_; }

  [[noreturn]] void fail(const std::string& msg, std::size_t at_line = 0) const {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(at_line ? at_line : line()) + ", field " +
                                           (field_.empty() ? std::string("<start>") : field_) + ": " + msg);
  }

  bool peek(std::string_view word) const { return !at_end() && toks_[pos_].text == word; }

  void key(const std::string& name) {
    if (at_end()) {
      field_ = name;
      fail("missing field");
    }
    if (toks_[pos_].text != name) {
      field_ = name;
      fail("expected field '" + name + "', found '" + toks_[pos_].text + "'");
    }
    field_ = name;
    ++pos_;
  }

  const std::string& word() {
    if (at_end()) fail("unexpected end of input");
    return toks_[pos_++].text;
  }

  BigInt integer() {
    const std::string& t = word();
    const std::size_t digits = t[0] == '-' ? 1 : 0;
    bool ok = t.size() > digits;
    for (std::size_t k = digits; k < t.size() && ok; ++k) ok = std::isdigit(static_cast<unsigned char>(t[k])) != 0;
    if (!ok) fail("expected an integer, found '" + t + "'", toks_[pos_ - 1].line);
    return BigInt(t, 10);
  }

  std::size_t count(std::size_t limit = kMaxCount) {
    const std::size_t at = line();
    const BigInt v = integer();
    if (v < 0 || v > limit) fail("count " + v.get_str() + " out of range [0, " + std::to_string(limit) + "]", at);
    return v.get_ui();
  }

  /// Guards a block of n tokens that is about to be read.
  void need(std::size_t n, const std::string& what) const {
    if (n > remaining()) fail(what + " needs " + std::to_string(n) + " entries, " + std::to_string(remaining()) + " left");
  }

  IntMatrix matrix() {
    const std::size_t rows = count(), cols = count();
    if (cols != 0 && rows > kMaxCount / cols) fail("matrix too large");
    need(rows * cols, "a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = integer();
    return m;
  }

  /// Runs a constructor and reports its errors against the current field.
  template <class F>
  auto build(std::size_t at_line, F&& make) const {
    try {
      return make();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError) throw;
      fail(e.what(), at_line);
    }
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 1;
  std::string field_;
};

void write_matrix(std::ostream& os, const IntMatrix& m, const std::string& indent) {
  os << m.rows() << ' ' << m.cols() << '\n';
  if (m.cols() == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << '\n';
  }
}

// Per-host codecs.  Raw is a parsed map that still lacks its codomain.

struct FinSetCodec {
  using Host = finset::FinSetCategory;
  using Raw = std::vector<std::size_t>;

  static finset::FinSetObj read_object(Reader& rd) { return {rd.count()}; }
  static Raw read_raw(Reader& rd, const finset::FinSetObj& dom) {
    rd.need(dom.size, "a map table");
    Raw t(dom.size);
    for (auto& v : t) v = rd.count();
    return t;
  }
  static finset::FinMap build(Raw raw, const finset::FinSetObj& dom, const finset::FinSetObj& cod) {
    return finset::FinMap(dom, cod, std::move(raw));
  }
  static void write_object(std::ostream& os, const finset::FinSetObj& o) { os << o.size << '\n'; }
  static void write_map(std::ostream& os, const finset::FinMap& f) {
    for (std::size_t k = 0; k < f.table().size(); ++k) os << (k ? " " : "") << f.table()[k];
    os << '\n';
  }
};

struct AbGpCodec {
  using Host = abgp::AbGpCategory;
  using Raw = IntMatrix;

  static abgp::FgAbGroup read_object(Reader& rd) {
    const std::size_t at = rd.line();
    const std::size_t gens = rd.count();
    IntMatrix rel = rd.matrix();
    if (rel.rows() != gens)
      rd.fail("relations matrix has " + std::to_string(rel.rows()) + " rows for " + std::to_string(gens) +
                  " generators",
              at);
    return abgp::FgAbGroup(gens, std::move(rel));
  }
  static Raw read_raw(Reader& rd, const abgp::FgAbGroup&) { return rd.matrix(); }
  static abgp::AbMap build(Raw raw, const abgp::FgAbGroup& dom, const abgp::FgAbGroup& cod) {
    return abgp::AbMap(dom, cod, std::move(raw));
  }
  static void write_object(std::ostream& os, const abgp::FgAbGroup& g) {
    os << g.generators() << ' ';
    write_matrix(os, g.relations(), "  ");
  }
  static void write_map(std::ostream& os, const abgp::AbMap& f) { write_matrix(os, f.matrix(), "  "); }
};

struct ChainCodec {
  using Host = chain::ChainCategory;
  using Raw = std::vector<IntMatrix>;

  static chain::ChainComplex read_object(Reader& rd) {
    const std::size_t at = rd.line();
    const std::size_t top = rd.count(64);
    rd.need(top + 1, "the ranks");
    std::vector<std::size_t> ranks(top + 1);
    for (auto& r : ranks) r = rd.count();
    std::vector<IntMatrix> diff;
    for (std::size_t d = 0; d < top; ++d) diff.push_back(rd.matrix());
    return rd.build(at, [&] { return chain::ChainComplex(ranks, diff); });
  }
  static Raw read_raw(Reader& rd, const chain::ChainComplex&) {
    const std::size_t k = rd.count(64);
    Raw comps;
    for (std::size_t d = 0; d < k; ++d) comps.push_back(rd.matrix());
    return comps;
  }
  static chain::ChainMap build(Raw raw, const chain::ChainComplex& dom, const chain::ChainComplex& cod) {
    return chain::ChainMap(dom, cod, std::move(raw));
  }
  static void write_object(std::ostream& os, const chain::ChainComplex& x) {
    const std::size_t top = x.length() == 0 ? 0 : x.length() - 1;
    os << top;
    for (std::size_t d = 0; d <= top; ++d) os << ' ' << x.rank(d);
    os << '\n';
    for (std::size_t d = 1; d <= top; ++d) {
      os << "  ";
      write_matrix(os, x.boundary(d), "    ");
    }
  }
  static void write_map(std::ostream& os, const chain::ChainMap& f) {
    os << f.length() << '\n';
    for (std::size_t d = 0; d < f.length(); ++d) {
      os << "  ";
      write_matrix(os, f.component(d), "    ");
    }
  }
};

struct CatCodec {
  using Host = fincat::CatCategory;
  using Raw = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

  static fincat::FinCategory read_object(Reader& rd) {
    const std::size_t at = rd.line();
    fincat::CategoryTable t;
    t.objects = rd.count();
    const std::size_t m = rd.count(4096);
    rd.need(2 * m + t.objects, "the morphism list and identities");
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t s = rd.count(), g = rd.count();
      if (s >= t.objects || g >= t.objects) rd.fail("morphism " + std::to_string(k) + " has an endpoint out of range");
      t.arrows.push_back({s, g});
    }
    for (std::size_t o = 0; o < t.objects; ++o) {
      const std::size_t id = rd.count();
      if (id >= m) rd.fail("identity of object " + std::to_string(o) + " out of range");
      t.identities.push_back(id);
    }
    t.table.assign(m * m, fincat::kNone);
    for (std::size_t o = 0; o < t.objects; ++o) {
      const std::size_t id = t.identities[o];
      for (std::size_t f = 0; f < m; ++f) {
        if (t.arrows[f].tgt == o) t.table[id * m + f] = f;
        if (t.arrows[f].src == o) t.table[f * m + id] = f;
      }
    }
    const std::size_t k = rd.count(m * m);
    rd.need(3 * k, "the composition triples");
    for (std::size_t e = 0; e < k; ++e) {
      const std::size_t g = rd.count(), f = rd.count(), h = rd.count();
      if (g >= m || f >= m || h >= m) rd.fail("composition triple " + std::to_string(e) + " out of range");
      t.table[g * m + f] = h;
    }
    return rd.build(at, [&] { return fincat::FinCategory(std::move(t)); });
  }
  static Raw read_raw(Reader& rd, const fincat::FinCategory& dom) {
    rd.need(dom.objects() + dom.morphisms(), "a functor");
    Raw raw;
    for (std::size_t o = 0; o < dom.objects(); ++o) raw.first.push_back(rd.count());
    for (std::size_t f = 0; f < dom.morphisms(); ++f) raw.second.push_back(rd.count());
    return raw;
  }
  static fincat::Functor build(Raw raw, const fincat::FinCategory& dom, const fincat::FinCategory& cod) {
    return fincat::Functor(dom, cod, std::move(raw.first), std::move(raw.second));
  }
  static void write_object(std::ostream& os, const fincat::FinCategory& c) {
    const std::size_t m = c.morphisms();
    os << c.objects() << ' ' << m << '\n';
    for (std::size_t f = 0; f < m; ++f) os << "  " << c.src(f) << ' ' << c.tgt(f) << "  # " << c.name(f) << '\n';
    os << " ";
    for (std::size_t o = 0; o < c.objects(); ++o) os << ' ' << c.identity(o);
    os << '\n';
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t f = 0; f < m; ++f)
        if (!c.is_identity(g) && !c.is_identity(f) && c.try_compose(g, f) != fincat::kNone)
          triples.push_back({g, f, c.try_compose(g, f)});
    os << "  " << triples.size() << '\n';
    for (const auto& t : triples) os << "  " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  }
  static void write_map(std::ostream& os, const fincat::Functor& f) {
    for (std::size_t v : f.on_objects()) os << v << ' ';
    os << ' ';
    for (std::size_t k = 0; k < f.on_morphisms().size(); ++k) os << (k ? " " : "") << f.on_morphisms()[k];
    os << '\n';
  }
};

template <class Codec>
CoCategoryData<typename Codec::Host> parse_body(Reader& rd) {
  using Cat = typename Codec::Host;
  using Object = typename Cat::Object;
  const Cat cat;

  rd.key("q0");
  const Object q0 = Codec::read_object(rd);
  rd.key("q1");
  const Object q1 = Codec::read_object(rd);
  auto map = [&](const std::string& name, const Object& dom, const Object& cod) {
    rd.key(name);
    const std::size_t at = rd.line();
    auto raw = Codec::read_raw(rd, dom);
    return rd.build(at, [&] { return Codec::build(std::move(raw), dom, cod); });
  };
  auto l = map("l", q0, q1);
  auto r = map("r", q0, q1);
  auto i = map("i", q1, q0);
  rd.key("q");
  const std::size_t q_line = rd.line();
  auto raw_q = Codec::read_raw(rd, q1);

  WitnessOf<Cat> dbl;
  if (rd.peek("double")) {
    rd.key("double");
    Object apex = Codec::read_object(rd);
    auto nu1 = map("nu1", q1, apex);
    auto nu2 = map("nu2", q1, apex);
    dbl = WitnessOf<Cat>{std::move(apex), {std::move(nu1), std::move(nu2)}, r, l};
  } else {
    dbl = cat.pushout(r, l);
  }
  if (!rd.at_end()) {
    const std::size_t at = rd.line();
    rd.fail("unexpected trailing token '" + rd.word() + "'", at);
  }
  auto q = [&] {
    // q is reported against its own field even though it is built last
    Reader::Field restore(rd, "q");
    return rd.build(q_line, [&] { return Codec::build(std::move(raw_q), q1, dbl.apex); });
  }();
  return make_cocategory_with_witness(cat, q0, q1, std::move(l), std::move(r), std::move(i), std::move(q),
                                      std::move(dbl));
}

template <class Codec>
std::string write_body(const CoCategoryData<typename Codec::Host>& d) {
  std::ostringstream os;
  auto obj = [&](const char* key, const auto& o) {
    os << key << ' ';
    Codec::write_object(os, o);
  };
  auto map = [&](const char* key, const auto& f) {
    os << key << ' ';
    Codec::write_map(os, f);
  };
  obj("q0", d.q0);
  obj("q1", d.q1);
  map("l", d.l);
  map("r", d.r);
  map("i", d.i);
  map("q", d.q);
  obj("double", d.double_pushout.apex);
  map("nu1", d.double_pushout.injections[0]);
  map("nu2", d.double_pushout.injections[1]);
  return os.str();
}

}  // namespace

AnyCoCategory parse_cocategory(std::string_view text) {
  Reader rd(text);
  rd.key("category");
  const std::size_t at = rd.line();
  const std::string name = rd.word();
  Host host;
  try {
    host = parse_host(name);
  } catch (const Error&) {
    rd.fail("unknown host category '" + name + "' (expected finset, abgp, chain or cat)", at);
  }
  switch (host) {
    case Host::FinSet: return parse_body<FinSetCodec>(rd);
    case Host::AbGp: return parse_body<AbGpCodec>(rd);
    case Host::Chain: return parse_body<ChainCodec>(rd);
    case Host::Cat: return parse_body<CatCodec>(rd);
  }
  throw std::logic_error("unreachable host");
}

AnyCoCategory read_cocategory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_cocategory(ss.str());
}

std::string write_cocategory(const AnyCoCategory& d) {
  const std::string head = "category " + std::string(host_name(host_of(d))) + "\n";
  return head + std::visit(
                    [](const auto& data) -> std::string {
                      using D = std::decay_t<decltype(data)>;
                      if constexpr (std::is_same_v<D, finset::CoCategory>) return write_body<FinSetCodec>(data);
                      else if constexpr (std::is_same_v<D, abgp::CoCategory>) return write_body<AbGpCodec>(data);
                      else if constexpr (std::is_same_v<D, chain::CoCategory>) return write_body<ChainCodec>(data);
                      else return write_body<CatCodec>(data);
                    },
                    d);
}

}  // namespace cocat::cli
