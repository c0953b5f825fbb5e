#include "cattkit/batanin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cattkit {

int dim_tree(const BataninTree& b) {
  int d = 0;
  for (const auto& c : b.children()) d = std::max(d, dim_tree(c) + 1);
  return d;
}

BataninTree boundary_tree(const BataninTree& b, std::size_t k) {
  if (k == 0) return BataninTree();
  std::vector<BataninTree> children;
  children.reserve(b.children().size());
  for (const auto& c : b.children()) children.push_back(boundary_tree(c, k - 1));
  return BataninTree(std::move(children));
}

std::size_t position_count(const BataninTree& b) {
  std::size_t n = 1;
  for (const auto& c : b.children()) n += position_count(c) + 1;
  return n;
}

namespace {

void print(std::ostream& out, const BataninTree& b) {
  out << "br[";
  for (std::size_t i = 0; i < b.children().size(); ++i) {
    if (i) out << ',';
    print(out, b.children()[i]);
  }
  out << ']';
}

class TreeReader {
 public:
  explicit TreeReader(std::string_view text) : text_(text) {}

  BataninTree read_all() {
    BataninTree t = read();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  BataninTree read() {
    skip();
    if (text_.substr(pos_, 2) != "br") fail("expected `br`");
    pos_ += 2;
    expect('[');
    std::vector<BataninTree> children;
    skip();
    if (peek() != ']') {
      children.push_back(read());
      skip();
      while (peek() == ',') {
        ++pos_;
        children.push_back(read());
        skip();
      }
    }
    expect(']');
    return BataninTree(std::move(children));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected `") + c + "`");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::InvalidTree, why + " at offset " + std::to_string(pos_)).at(pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct PosBuild {
  WedgeSum wedge;
  std::vector<Bipointed> summands;
};

// Pos(B) as a bipointed globular set, keeping the wedge injections.
PosBuild build_pos(const BataninTree& b) {
  PosBuild out;
  for (const auto& c : b.children()) out.summands.push_back(suspend(build_pos(c).wedge.sum.set));
  out.wedge = wedge(out.summands);
  return out;
}

enum class End { Source, Target };

GlobMorphism boundary_inclusion(const BataninTree& b, std::size_t k, End end) {
  const PosBuild whole = build_pos(b);
  if (k == 0) {
    GlobMorphism out;
    out.maps.push_back({end == End::Source ? whole.wedge.sum.minus : whole.wedge.sum.plus});
    return out;
  }
  const PosBuild part = build_pos(boundary_tree(b, k));
  std::vector<GlobMorphism> pieces;
  for (const auto& c : b.children()) pieces.push_back(suspend(boundary_inclusion(c, k - 1, end)));
  return wedge_map(part.wedge, whole.wedge, pieces);
}

}  // namespace

std::string to_string(const BataninTree& b) {
  std::ostringstream out;
  print(out, b);
  return out.str();
}

BataninTree parse_tree(std::string_view text) { return TreeReader(text).read_all(); }

PosSet pos(const BataninTree& b) {
  auto card = GlobCardinal::from(build_pos(b).wedge.sum.set);
  CATTKIT_ASSERT(card.is_canonical(), "positions are numbered along the Sol order");
  return PosSet{b, std::move(card)};
}

GlobMorphism src_pos(const BataninTree& b, std::size_t k) { return boundary_inclusion(b, k, End::Source); }
GlobMorphism tgt_pos(const BataninTree& b, std::size_t k) { return boundary_inclusion(b, k, End::Target); }

bool is_smooth(const std::vector<std::size_t>& values) {
  if (values.empty() || values.front() != 0 || values.back() != 0) return false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const auto a = values[i - 1];
    const auto b = values[i];
    if (a + 1 != b && b + 1 != a) return false;
  }
  return true;
}

Zigzag Zigzag::make(std::vector<std::size_t> values) {
  if (!is_smooth(values)) {
    std::ostringstream out;
    out << "sequence (";
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << ") is not a smooth zigzag";
    throw Error(ErrorKind::NotSmooth, out.str());
  }
  return Zigzag(std::move(values));
}

std::string to_string(const Zigzag& z) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < z.size(); ++i) out << (i ? "," : "") << z[i];
  out << ')';
  return out.str();
}

Zigzag parse_zigzag(std::string_view text) {
  std::vector<std::size_t> values;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidTree, why + " at offset " + std::to_string(i)).at(i);
  };
  skip();
  if (i >= text.size() || text[i] != '(') fail("expected `(`");
  ++i;
  for (;;) {
    skip();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a natural number");
    std::size_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
    values.push_back(v);
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ')') {
      ++i;
      break;
    }
    fail("expected `,` or `)`");
  }
  skip();
  if (i != text.size()) fail("trailing input");
  return Zigzag::make(std::move(values));
}

Zigzag zig(const GlobCardinal& x) {
  std::vector<std::size_t> out;
  out.reserve(x.size());
  for (auto c : x.order()) out.push_back(static_cast<std::size_t>(c.dim));
  return Zigzag::make(std::move(out));
}

GlobCardinal card(const Zigzag& m) {
  const auto& v = m.values();
  const std::size_t n = v.size();
  std::vector<std::size_t> id(n);
  std::vector<std::size_t> next;
  for (std::size_t i = 0; i < n; ++i) {
    if (next.size() <= v[i]) next.resize(v[i] + 1, 0);
    id[i] = next[v[i]]++;
  }
  GlobSet x;
  // Cells are added dimension by dimension so their boundaries already exist.
  for (std::size_t d = 0; d < next.size(); ++d) {
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] != d) continue;
      if (d == 0) {
        x.add_point();
        continue;
      }
      std::size_t src = SIZE_MAX;
      for (std::size_t j = i; j-- > 0;) {
        if (v[j] == d - 1) {
          src = j;
          break;
        }
      }
      std::size_t tgt = SIZE_MAX;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (v[j] == d - 1) {
          tgt = j;
          break;
        }
      }
      CATTKIT_ASSERT(src != SIZE_MAX && tgt != SIZE_MAX, "smooth sequences bound every positive entry");
      x.add_cell(static_cast<int>(d), id[src], id[tgt]);
    }
  }
  return GlobCardinal::from(std::move(x));
}

BataninTree tree_of_zig(const Zigzag& m) {
  const auto& v = m.values();
  std::vector<BataninTree> children;
  std::size_t start = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] != 0) continue;
    std::vector<std::size_t> block;
    for (std::size_t j = start; j < i; ++j) block.push_back(v[j] - 1);
    children.push_back(tree_of_zig(Zigzag::make(std::move(block))));
    start = i + 1;
  }
  return BataninTree(std::move(children));
}

Zigzag zig_of_tree(const BataninTree& b) {
  std::vector<std::size_t> out{0};
  for (const auto& c : b.children()) {
    // (m)^+ = (0, m_1+1, ..., m_n+1, 0), glued onto the running sequence.
    const Zigzag inner = zig_of_tree(c);
    for (auto x : inner.values()) out.push_back(x + 1);
    out.push_back(0);
  }
  return Zigzag::make(std::move(out));
}

namespace {

void extend_zigzags(std::vector<std::size_t>& prefix, std::size_t length, std::vector<Zigzag>& out) {
  const std::size_t last = prefix.back();
  const std::size_t remaining = length - prefix.size();
  if (remaining == 0) {
    if (last == 0) out.push_back(Zigzag::make(prefix));
    return;
  }
  if (last > remaining) return;
  if (last > 0) {
    prefix.push_back(last - 1);
    extend_zigzags(prefix, length, out);
    prefix.pop_back();
  }
  prefix.push_back(last + 1);
  extend_zigzags(prefix, length, out);
  prefix.pop_back();
}

}  // namespace

std::vector<Zigzag> enumerate_zigzags(std::size_t length) {
  std::vector<Zigzag> out;
  if (length % 2 == 0) return out;
  std::vector<std::size_t> prefix{0};
  extend_zigzags(prefix, length, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BataninTree> enumerate_trees(std::size_t max_positions, bool exact) {
  std::vector<BataninTree> out;
  for (std::size_t len = exact ? max_positions : 1; len <= max_positions; len += 1) {
    for (const auto& z : enumerate_zigzags(len)) out.push_back(tree_of_zig(z));
  }
  return out;
}

}  // namespace cattkit
