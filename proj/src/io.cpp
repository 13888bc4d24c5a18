#include "planarity/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace planarity {

namespace {

long long to_number(const std::string& tok) {
  try {
    size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + tok + "'");
  }
}

std::vector<long long> read_numbers(std::istream& in) {
  std::vector<long long> nums;
  std::string line, tok;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    while (ls >> tok) nums.push_back(to_number(tok));
  }
  return nums;
}

}  // namespace

EdgeListData parse_edge_list(std::istream& in) {
  const auto nums = read_numbers(in);
  if (nums.size() < 2) throw ParseError("missing graph header");
  const long long n = nums[0], m = nums[1];
  if (n < 1 || m < 0 || n > 100'000'000 || m > 100'000'000)
    throw ParseError("invalid graph header");
  if (static_cast<long long>(nums.size()) != 2 + 2 * m)
    throw ParseError("edge lines do not match header");
  EdgeListData d;
  d.n = static_cast<int>(n);
  d.edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const long long u = nums[2 + 2 * i], v = nums[3 + 2 * i];
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError("endpoint out of range");
    d.edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
  }
  return d;
}

void write_edge_list(std::ostream& out, int n, const std::vector<Edge>& edges) {
  out << n << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

RotationSystem parse_rotation(std::istream& in, int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> lists(n);
  std::vector<char> line_seen(n, 0);
  std::vector<int> loop_seen(edges.size(), 0);
  std::string line, tok;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head.size() < 2 || head.back() != ':')
      throw ParseError("rotation line must start with 'v:'");
    head.pop_back();
    const long long v = to_number(head);
    if (v < 1 || v > n) throw ParseError("rotation vertex out of range");
    if (line_seen[v - 1]++) throw ParseError("duplicate rotation line");
    while (ls >> tok) {
      const auto slash = tok.find('/');
      if (slash == std::string::npos) throw ParseError("rotation entry must be w/e");
      const long long w = to_number(tok.substr(0, slash));
      const long long e = to_number(tok.substr(slash + 1));
      if (w < 1 || w > n) throw ParseError("rotation neighbor out of range");
      if (e < 1 || e > static_cast<long long>(edges.size()))
        throw ParseError("rotation edge id out of range");
      const Edge& ed = edges[e - 1];
      const int vi = static_cast<int>(v - 1), wi = static_cast<int>(w - 1);
      int half;
      if (ed.u == ed.v) {
        if (vi != ed.u || wi != ed.u) throw ParseError("rotation entry does not match edge");
        half = 2 * static_cast<int>(e - 1) + (loop_seen[e - 1]++ ? 1 : 0);
      } else if (ed.u == vi && ed.v == wi) {
        half = 2 * static_cast<int>(e - 1);
      } else if (ed.v == vi && ed.u == wi) {
        half = 2 * static_cast<int>(e - 1) + 1;
      } else {
        throw ParseError("rotation entry does not match edge");
      }
      lists[vi].push_back(half);
    }
  }
  return RotationSystem::from_lists(lists);
}

void write_rotation(std::ostream& out, int n, const std::vector<Edge>& edges,
                    const RotationSystem& rot) {
  for (int v = 0; v < n; ++v) {
    out << v + 1 << ':';
    for (const int h : rot.at(v)) {
      const Edge& ed = edges[h >> 1];
      const int w = (h & 1) ? ed.u : ed.v;
      out << ' ' << w + 1 << '/' << (h >> 1) + 1;
    }
    out << '\n';
  }
}

}  // namespace planarity
