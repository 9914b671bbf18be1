#include "graph.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "errors.h"

namespace gridsat {

Graph::Graph(int n_, std::vector<std::pair<int, int>> edgeList, std::string name_)
    : n(n_), name(std::move(name_)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edgeList) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edgeList.begin(), edgeList.end());
  edgeList.erase(std::unique(edgeList.begin(), edgeList.end()), edgeList.end());
  edges = std::move(edgeList);
  adj.assign(n, {});
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
}

bool Graph::hasEdge(int u, int v) const { return edgeIndex(u, v) >= 0; }

int Graph::edgeIndex(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
  return (int)(it - edges.begin());
}

int Graph::maxDegree() const {
  int best = 0;
  for (int v = 0; v < n; v++) best = std::max(best, degree(v));
  return best;
}

bool Graph::connected() const {
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        reached++;
        stack.push_back(w);
      }
  }
  return reached == n;
}

namespace {

bool parseInt(const std::string& token, long long& out) {
  if (token.empty()) return false;
  size_t pos = 0;
  if (token[0] == '-') pos = 1;
  if (pos >= token.size()) return false;
  for (size_t i = pos; i < token.size(); i++)
    if (!std::isdigit((unsigned char)token[i])) return false;
  try {
    out = std::stoll(token);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Graph parseEdgeList(const std::string& text, std::string name) {
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  long long declaredN = -1;
  long long maxId = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    lineNo++;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    std::string a, b, extra;
    ls >> a >> b;
    if (ls >> extra)
      throw ParseError("edge list line " + std::to_string(lineNo) + ": expected two tokens");
    if (a == "n") {
      long long count;
      if (b.empty() || !parseInt(b, count) || count < 0)
        throw ParseError("edge list line " + std::to_string(lineNo) + ": bad vertex count");
      if (declaredN >= 0)
        throw ParseError("edge list line " + std::to_string(lineNo) + ": duplicate n header");
      declaredN = count;
      continue;
    }
    long long u, v;
    if (b.empty() || !parseInt(a, u) || !parseInt(b, v) || u < 0 || v < 0)
      throw ParseError("edge list line " + std::to_string(lineNo) + ": expected \"u v\"");
    if (u == v)
      throw ParseError("edge list line " + std::to_string(lineNo) + ": self-loop on vertex " +
                       std::to_string(u));
    maxId = std::max(maxId, std::max(u, v));
    edges.push_back({(int)u, (int)v});
  }
  long long n = declaredN >= 0 ? declaredN : maxId + 1;
  if (declaredN >= 0 && maxId >= declaredN)
    throw ParseError("edge list: endpoint " + std::to_string(maxId) + " exceeds declared n " +
                     std::to_string(declaredN));
  return Graph((int)n, std::move(edges), std::move(name));
}

namespace {

struct GmlToken {
  enum Kind { Word, Number, Str, LBracket, RBracket, End } kind = End;
  std::string text;
};

class GmlLexer {
 public:
  explicit GmlLexer(const std::string& text) : text_(text) {}

  GmlToken next() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) pos_++;
    if (pos_ >= text_.size()) return {GmlToken::End, ""};
    char c = text_[pos_];
    if (c == '[') {
      pos_++;
      return {GmlToken::LBracket, "["};
    }
    if (c == ']') {
      pos_++;
      return {GmlToken::RBracket, "]"};
    }
    if (c == '"') {
      size_t end = text_.find('"', pos_ + 1);
      if (end == std::string::npos) throw ParseError("gml: unterminated string");
      std::string s = text_.substr(pos_ + 1, end - pos_ - 1);
      pos_ = end + 1;
      return {GmlToken::Str, s};
    }
    size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace((unsigned char)text_[pos_]) &&
           text_[pos_] != '[' && text_[pos_] != ']')
      pos_++;
    std::string s = text_.substr(start, pos_ - start);
    long long dummy;
    if (parseInt(s, dummy)) return {GmlToken::Number, s};
    return {GmlToken::Word, s};
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
};

void skipBalanced(GmlLexer& lex) {
  int depth = 1;
  while (depth > 0) {
    GmlToken t = lex.next();
    if (t.kind == GmlToken::End) throw ParseError("gml: unbalanced brackets");
    if (t.kind == GmlToken::LBracket) depth++;
    if (t.kind == GmlToken::RBracket) depth--;
  }
}

// Parses key/value fields of a node or edge record, skipping nested blocks.
std::vector<std::pair<std::string, std::string>> parseRecord(GmlLexer& lex) {
  std::vector<std::pair<std::string, std::string>> fields;
  while (true) {
    GmlToken t = lex.next();
    if (t.kind == GmlToken::RBracket) return fields;
    if (t.kind != GmlToken::Word)
      throw ParseError("gml: expected field name, got \"" + t.text + "\"");
    GmlToken v = lex.next();
    if (v.kind == GmlToken::LBracket) {
      skipBalanced(lex);
      continue;
    }
    if (v.kind != GmlToken::Number && v.kind != GmlToken::Str && v.kind != GmlToken::Word)
      throw ParseError("gml: bad value for field \"" + t.text + "\"");
    fields.push_back({t.text, v.text});
  }
}

}  // namespace

Graph parseGml(const std::string& text, std::string name) {
  GmlLexer lex(text);
  GmlToken t = lex.next();
  if (t.kind != GmlToken::Word || t.text != "graph") throw ParseError("gml: expected \"graph\"");
  if (lex.next().kind != GmlToken::LBracket) throw ParseError("gml: expected \"[\" after graph");

  std::vector<long long> nodeIds;
  std::vector<std::pair<long long, long long>> rawEdges;
  while (true) {
    GmlToken item = lex.next();
    if (item.kind == GmlToken::RBracket) break;
    if (item.kind == GmlToken::End) throw ParseError("gml: missing closing \"]\"");
    if (item.kind != GmlToken::Word) throw ParseError("gml: unexpected token \"" + item.text + "\"");
    GmlToken v = lex.next();
    if (item.text == "node" || item.text == "edge") {
      if (v.kind != GmlToken::LBracket)
        throw ParseError("gml: expected \"[\" after " + item.text);
      auto fields = parseRecord(lex);
      if (item.text == "node") {
        long long id;
        bool found = false;
        for (auto& [k, val] : fields)
          if (k == "id" && parseInt(val, id)) found = true;
        if (!found) throw ParseError("gml: node without id");
        nodeIds.push_back(id);
      } else {
        long long src = 0, dst = 0;
        bool hasSrc = false, hasDst = false;
        for (auto& [k, val] : fields) {
          if (k == "source" && parseInt(val, src)) hasSrc = true;
          if (k == "target" && parseInt(val, dst)) hasDst = true;
        }
        if (!hasSrc || !hasDst) throw ParseError("gml: edge without source/target");
        rawEdges.push_back({src, dst});
      }
    } else if (v.kind == GmlToken::LBracket) {
      skipBalanced(lex);
    } else if (v.kind == GmlToken::End) {
      throw ParseError("gml: missing value for \"" + item.text + "\"");
    }
    // other scalar fields (directed, label, ...) are ignored
  }

  std::vector<std::pair<long long, int>> remap;
  for (int i = 0; i < (int)nodeIds.size(); i++) {
    for (auto& [id, _] : remap)
      if (id == nodeIds[i]) throw ParseError("gml: duplicate node id " + std::to_string(id));
    remap.push_back({nodeIds[i], i});
  }
  auto lookup = [&](long long id) {
    for (auto& [orig, idx] : remap)
      if (orig == id) return idx;
    throw ParseError("gml: edge endpoint " + std::to_string(id) + " is not a node");
  };
  std::vector<std::pair<int, int>> edges;
  for (auto [src, dst] : rawEdges) {
    int u = lookup(src), v = lookup(dst);
    if (u == v) throw ParseError("gml: self-loop on node " + std::to_string(src));
    edges.push_back({u, v});
  }
  Graph g((int)nodeIds.size(), std::move(edges), std::move(name));
  g.labels.reserve(nodeIds.size());
  for (long long id : nodeIds) g.labels.push_back(std::to_string(id));
  return g;
}

std::string toEdgeList(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n << "\n";
  for (auto [u, v] : g.edges) out << u << " " << v << "\n";
  return out.str();
}

std::string toGml(const Graph& g) {
  std::ostringstream out;
  out << "graph [\n";
  for (int v = 0; v < g.n; v++) out << "  node [\n    id " << v << "\n  ]\n";
  for (auto [u, v] : g.edges)
    out << "  edge [\n    source " << u << "\n    target " << v << "\n  ]\n";
  out << "]\n";
  return out.str();
}

std::vector<Block> biconnectedComponents(const Graph& g) {
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<std::pair<int, int>> edgeStack;
  std::vector<std::vector<std::pair<int, int>>> blockEdges;
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    size_t next;
  };
  std::vector<Frame> stack;

  auto popBlock = [&](int u, int w) {
    std::vector<std::pair<int, int>> block;
    while (true) {
      auto e = edgeStack.back();
      edgeStack.pop_back();
      block.push_back(e);
      if (e == std::make_pair(u, w)) break;
    }
    blockEdges.push_back(std::move(block));
  };

  for (int root = 0; root < g.n; root++) {
    if (disc[root] >= 0) continue;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      int v = f.v;
      if (f.next == 0) {
        disc[v] = low[v] = timer++;
      }
      if (f.next < g.adj[v].size()) {
        int w = g.adj[v][f.next++];
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          edgeStack.push_back({v, w});
          stack.push_back({w, v, 0});
        } else if (disc[w] < disc[v]) {
          edgeStack.push_back({v, w});
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        int parent = f.parent;
        stack.pop_back();
        if (parent >= 0) {
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= disc[parent]) popBlock(parent, v);
        }
      }
    }
  }

  std::vector<Block> blocks;
  for (size_t bi = 0; bi < blockEdges.size(); bi++) {
    std::vector<int> ids;
    for (auto [u, v] : blockEdges[bi]) {
      ids.push_back(u);
      ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto localId = [&](int orig) {
      return (int)(std::lower_bound(ids.begin(), ids.end(), orig) - ids.begin());
    };
    std::vector<std::pair<int, int>> local;
    for (auto [u, v] : blockEdges[bi]) local.push_back({localId(u), localId(v)});
    std::string name = g.name.empty() ? "block" : g.name;
    Block b{Graph((int)ids.size(), std::move(local), name + "#b" + std::to_string(bi)),
            std::move(ids)};
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace gridsat
