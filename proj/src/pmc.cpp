#include "bhf/pmc.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bhf {

PointedMatchedCircle::PointedMatchedCircle(int num_points, std::vector<std::pair<int, int>> matching)
    : n_(num_points) {
  if (n_ < 0 || n_ % 4 != 0) throw BadGenus("number of points must be 4k");
  partner_.assign(n_, -1);
  for (auto [a, b] : matching) {
    if (a < 1 || a > n_ || b < 1 || b > n_ || a == b) throw NotAnInvolution("bad pair");
    int i = a - 1, j = b - 1;
    if (partner_[i] != -1 || partner_[j] != -1) throw NotAnInvolution("repeated point");
    partner_[i] = j;
    partner_[j] = i;
  }
  for (int p = 0; p < n_; ++p)
    if (partner_[p] == -1) throw NotAnInvolution("unmatched point");

  // Surgery on all pairs must leave a single circle. Segments s_0..s_{n-1}
  // with s_i running from point i to point i+1 (s_{n-1} through z back to
  // point 0, i.e. 1-based: s_0 starts at point 1's predecessor side).
  // Successor map: segment ending at p continues from the segment leaving
  // partner(p).
  if (n_ > 0) {
    // segment i: from point i to point i+1 mod n (through z when i = n-1).
    // Segment ending at point p is segment (p-1 mod n); segment leaving p is p.
    std::vector<int> next(n_);
    for (int p = 0; p < n_; ++p) {
      int ending = (p + n_ - 1) % n_;
      next[ending] = partner_[p];
    }
    std::vector<bool> seen(n_, false);
    int count = 0;
    for (int s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      ++count;
      int cur = s;
      while (!seen[cur]) {
        seen[cur] = true;
        cur = next[cur];
      }
    }
    if (count != 1) throw SurgeryDisconnects("surgery yields " + std::to_string(count) + " circles");
  }

  pair_of_.assign(n_, -1);
  for (int p = 0; p < n_; ++p) {
    if (pair_of_[p] != -1) continue;
    int h = static_cast<int>(pairs_.size());
    pair_of_[p] = h;
    pair_of_[partner_[p]] = h;
    pairs_.emplace_back(p, partner_[p]);
  }
}

std::vector<std::pair<int, int>> PointedMatchedCircle::canonical_matching() const {
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : pairs_) out.emplace_back(a + 1, b + 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool PointedMatchedCircle::operator==(const PointedMatchedCircle& o) const {
  return n_ == o.n_ && canonical_matching() == o.canonical_matching();
}

PointedMatchedCircle PointedMatchedCircle::reversed() const {
  std::vector<std::pair<int, int>> m;
  for (auto [a, b] : pairs_) m.emplace_back(n_ - a, n_ - b);  // 1-based: n+1-(a+1)
  return PointedMatchedCircle(n_, m);
}

int PointedMatchedCircle::reversed_pair(int h) const {
  PointedMatchedCircle r = reversed();
  auto [a, b] = pairs_[h];
  return r.pair_of(n_ - 1 - a);
}

std::string PointedMatchedCircle::to_json() const {
  nlohmann::json j;
  j["points"] = n_;
  auto m = canonical_matching();
  j["matching"] = nlohmann::json::array();
  for (auto [a, b] : m) j["matching"].push_back({a, b});
  return j.dump();
}

PointedMatchedCircle PointedMatchedCircle::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::pair<int, int>> m;
  for (const auto& p : j.at("matching")) m.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return PointedMatchedCircle(j.at("points").get<int>(), m);
}

PointedMatchedCircle connect_sum(const PointedMatchedCircle& z1, const PointedMatchedCircle& z2) {
  std::vector<std::pair<int, int>> m;
  for (auto [a, b] : z1.canonical_matching()) m.emplace_back(a, b);
  int shift = z1.num_points();
  for (auto [a, b] : z2.canonical_matching()) m.emplace_back(a + shift, b + shift);
  return PointedMatchedCircle(z1.num_points() + z2.num_points(), m);
}

PointedMatchedCircle standard_pmc(StandardKind kind, int genus) {
  if (genus < 1) throw BadGenus("genus must be >= 1");
  if (kind == StandardKind::Torus) {
    if (genus != 1) throw BadGenus("torus circle requires genus 1");
    return PointedMatchedCircle(4, {{1, 3}, {2, 4}});
  }
  if (kind == StandardKind::Split) {
    PointedMatchedCircle z = standard_pmc(StandardKind::Torus, 1);
    for (int i = 1; i < genus; ++i) z = connect_sum(z, standard_pmc(StandardKind::Torus, 1));
    return z;
  }
  // antipodal: i matched with i + 2k
  std::vector<std::pair<int, int>> m;
  for (int i = 1; i <= 2 * genus; ++i) m.emplace_back(i, i + 2 * genus);
  return PointedMatchedCircle(4 * genus, m);
}

PointedMatchedCircle parse_pmc_spec(const std::string& spec) {
  if (spec == "torus") return standard_pmc(StandardKind::Torus, 1);
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string kind = spec.substr(0, colon);
    int g = std::stoi(spec.substr(colon + 1));
    if (kind == "split") return standard_pmc(StandardKind::Split, g);
    if (kind == "antipodal") return standard_pmc(StandardKind::Antipodal, g);
  }
  std::ifstream in(spec);
  if (!in) throw std::runtime_error("cannot parse pmc spec: " + spec);
  std::stringstream ss;
  ss << in.rdbuf();
  return PointedMatchedCircle::from_json(ss.str());
}

}  // namespace bhf
