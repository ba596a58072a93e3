#include "arbor/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "arbor/errors.hpp"

namespace arbor {

bool encoding_less(std::string_view a, std::string_view b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

std::strong_ordering shortlex(std::string_view a, std::string_view b) noexcept {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.compare(b) <=> 0;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class BracketParser {
 public:
  explicit BracketParser(std::string_view text) : text_(text) {}

  std::vector<RootedTree> parse_sequence() {
    std::vector<RootedTree> out;
    skip_space();
    while (pos_ < text_.size()) {
      out.push_back(parse_one());
      skip_space();
    }
    return out;
  }

 private:
  RootedTree parse_one() {
    if (text_[pos_] != '[')
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    ++pos_;
    std::vector<RootedTree> children;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) throw ParseError("unbalanced '['", pos_);
      if (text_[pos_] == ']') {
        ++pos_;
        return children.empty() ? RootedTree() : RootedTree(std::move(children));
      }
      children.push_back(parse_one());
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint64_t factorial(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

// Non-decreasing sequences over `pool` (already sorted) summing to `remaining`
// under `weight`, starting at index `from`.
template <class Weight, class Emit>
void multisets(const std::vector<RootedTree>& pool, Weight weight, std::size_t remaining,
               std::size_t from, std::vector<RootedTree>& current, Emit& emit) {
  if (remaining == 0) {
    emit(current);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    const std::size_t w = weight(pool[i]);
    if (w > remaining) break;  // pool is sorted by size
    current.push_back(pool[i]);
    multisets(pool, weight, remaining - w, i, current, emit);
    current.pop_back();
  }
}

std::vector<RootedTree> trees_up_to(std::size_t n, std::size_t max_vertices) {
  std::vector<RootedTree> pool;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& level = enumerate_trees(k, max_vertices);
    pool.insert(pool.end(), level.begin(), level.end());
  }
  return pool;
}

void check_bound(std::size_t n, std::size_t max_vertices) {
  if (n > max_vertices)
    throw ResourceError("size " + std::to_string(n) + " exceeds the configured maximum of " +
                        std::to_string(max_vertices) + " vertices");
}

RootedTree graft_rec(const RootedTree& scion, const RootedTree& stock, std::size_t& counter,
                     bool& done) {
  if (counter == 0) {
    done = true;
    std::vector<RootedTree> kids(stock.children().begin(), stock.children().end());
    kids.push_back(scion);
    return RootedTree(std::move(kids));
  }
  --counter;
  std::vector<RootedTree> kids;
  kids.reserve(stock.children().size());
  for (const auto& c : stock.children()) {
    if (done) {
      kids.push_back(c);
    } else {
      kids.push_back(graft_rec(scion, c, counter, done));
    }
  }
  return kids.empty() ? stock : RootedTree(std::move(kids));
}

}  // namespace

const std::shared_ptr<const RootedTree::Node>& RootedTree::leaf() {
  static const auto node = [] {
    auto n = std::make_shared<Node>();
    n->code = "[]";
    return std::shared_ptr<const Node>(std::move(n));
  }();
  return node;
}

RootedTree::RootedTree() : node_(leaf()) {}

RootedTree::RootedTree(std::vector<RootedTree> children) {
  if (children.empty()) {
    node_ = leaf();
    return;
  }
  std::sort(children.begin(), children.end());
  auto node = std::make_shared<Node>();
  std::size_t length = 2;
  for (const auto& c : children) {
    node->vertices += c.vertex_count();
    length += c.encoding().size();
  }
  node->code.reserve(length);
  node->code += '[';
  for (const auto& c : children) node->code += c.encoding();
  node->code += ']';
  node->children = std::move(children);
  node_ = std::move(node);
}

std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  return shortlex(a.encoding(), b.encoding());
}

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i) code_ += ' ';
    code_ += trees_[i].encoding();
  }
}

Forest::Forest(const RootedTree& tree) : trees_{tree}, code_(tree.encoding()) {}

std::size_t Forest::vertex_count() const noexcept {
  std::size_t n = 0;
  for (const auto& t : trees_) n += t.vertex_count();
  return n;
}

std::size_t Forest::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& t : trees_) n += t.edge_count();
  return n;
}

Forest Forest::without_single_vertices() const {
  std::vector<RootedTree> kept;
  kept.reserve(trees_.size());
  for (const auto& t : trees_)
    if (!t.is_single_vertex()) kept.push_back(t);
  if (kept.size() == trees_.size()) return *this;
  return Forest(std::move(kept));
}

Forest operator*(const Forest& a, const Forest& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<RootedTree> all;
  all.reserve(a.size() + b.size());
  std::merge(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end(),
             std::back_inserter(all));
  Forest f;
  f.trees_ = std::move(all);
  for (std::size_t i = 0; i < f.trees_.size(); ++i) {
    if (i) f.code_ += ' ';
    f.code_ += f.trees_[i].encoding();
  }
  return f;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) noexcept {
  return shortlex(a.code_, b.code_);
}

RootedTree parse_tree(std::string_view text) {
  BracketParser parser(text);
  auto trees = parser.parse_sequence();
  if (trees.empty()) throw ParseError("empty input, expected '['", text.size());
  if (trees.size() > 1) {
    // Report the start of the second tree.
    std::size_t depth = 0;
    std::size_t i = 0;
    for (; i < text.size(); ++i) {
      if (text[i] == '[') ++depth;
      if (text[i] == ']' && --depth == 0) break;
    }
    ++i;
    while (i < text.size() && is_space(text[i])) ++i;
    throw ParseError("trailing input after tree", i);
  }
  return trees.front();
}

Forest parse_forest(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && is_space(text[b])) ++b;
  while (e > b && is_space(text[e - 1])) --e;
  const auto trimmed = text.substr(b, e - b);
  if (trimmed.empty() || trimmed == "1") return Forest();
  return Forest(BracketParser(text).parse_sequence());
}

std::uint64_t symmetry_factor(const RootedTree& t) {
  std::uint64_t sigma = 1;
  const auto kids = t.children();
  for (std::size_t i = 0; i < kids.size();) {
    std::size_t j = i;
    while (j < kids.size() && kids[j] == kids[i]) ++j;
    const std::uint64_t child = symmetry_factor(kids[i]);
    for (std::size_t k = i; k < j; ++k) sigma *= child;
    sigma *= factorial(j - i);
    i = j;
  }
  return sigma;
}

const std::vector<RootedTree>& enumerate_trees(std::size_t n, std::size_t max_vertices) {
  if (n == 0) throw DomainError("a rooted tree has at least one vertex");
  check_bound(n, max_vertices);

  static std::recursive_mutex mutex;
  static std::map<std::size_t, std::vector<RootedTree>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<RootedTree> out;
  if (n == 1) {
    out.emplace_back();
  } else {
    const auto pool = trees_up_to(n - 1, max_vertices);
    std::vector<RootedTree> current;
    auto emit = [&](const std::vector<RootedTree>& kids) { out.emplace_back(kids); };
    multisets(pool, [](const RootedTree& t) { return t.vertex_count(); }, n - 1, 0, current, emit);
    std::sort(out.begin(), out.end());
  }
  return cache.emplace(n, std::move(out)).first->second;
}

const std::vector<Forest>& enumerate_forests(std::size_t degree, Grading grading,
                                             std::size_t max_vertices) {
  static std::recursive_mutex mutex;
  static std::map<std::pair<std::size_t, Grading>, std::vector<Forest>> cache;
  std::lock_guard lock(mutex);
  const auto key = std::make_pair(degree, grading);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::vector<Forest> out;
  std::vector<RootedTree> current;
  auto emit = [&](const std::vector<RootedTree>& trees) { out.emplace_back(trees); };
  if (grading == Grading::Vertices) {
    check_bound(degree, max_vertices);
    const auto pool = trees_up_to(degree, max_vertices);
    multisets(pool, [](const RootedTree& t) { return t.vertex_count(); }, degree, 0, current, emit);
  } else {
    check_bound(degree + 1, max_vertices);
    auto pool = trees_up_to(degree + 1, max_vertices);
    pool.erase(pool.begin());  // the single vertex carries no edge
    multisets(pool, [](const RootedTree& t) { return t.edge_count(); }, degree, 0, current, emit);
  }
  std::sort(out.begin(), out.end());
  return cache.emplace(key, std::move(out)).first->second;
}

RootedTree graft_at(const RootedTree& scion, const RootedTree& stock, std::size_t vertex) {
  if (vertex >= stock.vertex_count())
    throw DomainError("vertex index " + std::to_string(vertex) + " out of range for a tree with " +
                      std::to_string(stock.vertex_count()) + " vertices");
  std::size_t counter = vertex;
  bool done = false;
  return graft_rec(scion, stock, counter, done);
}

}  // namespace arbor
