#include "cgt/perm.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

namespace cgt::perm {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point v : img_) {
    require(v < img_.size() && !seen[v], "InvalidPermutation",
            "image list is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::operator*(const Perm& o) const {
  require(degree() == o.degree(), "InvalidPermutation", "degree mismatch");
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

unsigned long long Perm::order() const {
  std::vector<bool> seen(img_.size(), false);
  unsigned long long ord = 1;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    unsigned long long len = 0;
    Point x = static_cast<Point>(i);
    do {
      seen[x] = true;
      x = img_[x];
      ++len;
    } while (x != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm Perm::power(long long e) const {
  unsigned long long n = order();
  long long m = static_cast<long long>(e % static_cast<long long>(n));
  if (m < 0) m += n;
  Perm base = *this, r(degree());
  while (m) {
    if (m & 1) r = r * base;
    base = base * base;
    m >>= 1;
  }
  return r;
}

Perm Perm::conj(const Perm& g) const { return g.inverse() * (*this) * g; }

Perm Perm::from_cycles(size_t n, const std::string& text) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    require(text[i] == '(', "ParseError",
            "expected '(' at position " + std::to_string(i));
    ++i;
    std::vector<Point> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      require(j > i, "ParseError", "expected point at position " + std::to_string(i));
      unsigned long v = std::stoul(text.substr(i, j - i));
      require(v < n, "ParseError", "point " + std::to_string(v) + " out of range");
      cyc.push_back(static_cast<Point>(v));
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    require(i < text.size(), "ParseError", "unterminated cycle");
    ++i;  // ')'
    for (size_t c = 0; c + 1 < cyc.size(); ++c) img[cyc[c]] = cyc[c + 1];
    if (cyc.size() > 1) img[cyc.back()] = cyc.front();
    skip_ws();
  }
  return Perm(img);
}

std::string Perm::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (size_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    out << '(';
    Point x = static_cast<Point>(i);
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x;
      first = false;
      seen[x] = true;
      x = img_[x];
    } while (x != i);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

size_t Perm::hash() const {
  size_t h = 1469598103934665603ull;
  for (Point v : img_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

// ---- stabilizer chain -------------------------------------------------------

Perm ChainLevel::transversal(Point x, size_t degree) const {
  std::vector<int32_t> word;
  Point cur = x;
  while (cur != base) {
    word.push_back(tree_gen[cur]);
    cur = tree_from[cur];
  }
  Perm u(degree);
  for (size_t i = word.size(); i-- > 0;) u = u * gens[word[i]];
  return u;
}

namespace {

void rebuild_orbit(ChainLevel& level, size_t degree) {
  level.orbit_pos.assign(degree, -1);
  level.tree_gen.assign(degree, -1);
  level.tree_from.assign(degree, 0);
  level.orbit = {level.base};
  level.orbit_pos[level.base] = 0;
  size_t head = 0;
  while (head < level.orbit.size()) {
    Point a = level.orbit[head++];
    for (size_t gi = 0; gi < level.gens.size(); ++gi) {
      Point b = level.gens[gi][a];
      if (level.orbit_pos[b] < 0) {
        level.orbit_pos[b] = static_cast<int32_t>(level.orbit.size());
        level.tree_gen[b] = static_cast<int32_t>(gi);
        level.tree_from[b] = a;
        level.orbit.push_back(b);
      }
    }
  }
}

}  // namespace

PermGroup::PermGroup() : degree_(1), order_(1) {}

PermGroup::PermGroup(size_t degree, std::vector<Perm> generators,
                     const std::vector<Point>& base_hint)
    : degree_(degree) {
  for (auto& g : generators)
    require(g.degree() == degree, "InvalidPermutation", "generator degree mismatch");
  generators.erase(std::remove_if(generators.begin(), generators.end(),
                                  [](const Perm& g) { return g.is_identity(); }),
                   generators.end());
  gens_ = generators;
  build_chain(base_hint);
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (auto& lvl : chain_) b.push_back(lvl.base);
  return b;
}

void PermGroup::build_chain(const std::vector<Point>& base_hint) {
  chain_.clear();
  order_ = 1;
  if (gens_.empty()) return;

  auto moved_point = [&](const Perm& g) -> Point {
    for (Point b : base_hint)
      if (g[b] != b) return b;
    for (Point b = 0; b < degree_; ++b)
      if (g[b] != b) return b;
    fail("InvalidPermutation", "identity has no moved point");
  };

  ChainLevel top;
  top.base = moved_point(gens_[0]);
  // ensure the top base point is moved by some generator; any moved point works
  top.gens = gens_;
  chain_.push_back(top);
  rebuild_orbit(chain_[0], degree_);

  // strip h through levels [from, end); returns residue and stop level
  auto strip = [&](Perm h, size_t from) -> std::pair<Perm, size_t> {
    for (size_t j = from; j < chain_.size(); ++j) {
      Point img = h[chain_[j].base];
      if (img == chain_[j].base) continue;
      if (!chain_[j].in_orbit(img)) return {h, j};
      Perm u = chain_[j].transversal(img, degree_);
      h = h * u.inverse();
    }
    return {h, chain_.size()};
  };

  // Classic deterministic Schreier-Sims: process levels bottom-up; when a
  // Schreier generator fails to strip, append its residue to every level
  // from i+1 down to the stop level and restart there.
  size_t i = 0;
  while (true) {
    bool completed = true;
    rebuild_orbit(chain_[i], degree_);
    for (size_t oi = 0; oi < chain_[i].orbit.size() && completed; ++oi) {
      Point a = chain_[i].orbit[oi];
      Perm ua = chain_[i].transversal(a, degree_);
      for (size_t gi = 0; gi < chain_[i].gens.size() && completed; ++gi) {
        const Perm& g = chain_[i].gens[gi];
        Point b = g[a];
        Perm ub = chain_[i].transversal(b, degree_);
        Perm schreier = ua * g * ub.inverse();
        if (schreier.is_identity()) continue;
        auto [residue, j] = strip(schreier, i + 1);
        if (residue.is_identity()) continue;
        if (j == chain_.size()) {
          ChainLevel lvl;
          lvl.base = moved_point(residue);
          chain_.push_back(lvl);
        }
        for (size_t l = i + 1; l <= j; ++l) {
          chain_[l].gens.push_back(residue);
          rebuild_orbit(chain_[l], degree_);
        }
        i = j;
        completed = false;
      }
    }
    if (completed) {
      if (i == 0) break;
      --i;
    }
  }

  order_ = 1;
  for (auto& lvl : chain_) order_ *= static_cast<unsigned long long>(lvl.orbit.size());
}

Perm PermGroup::sift(const Perm& g) const {
  Perm h = g;
  for (auto& lvl : chain_) {
    Point img = h[lvl.base];
    if (img == lvl.base) continue;
    if (!lvl.in_orbit(img)) return h;
    Perm u = lvl.transversal(img, degree_);
    h = h * u.inverse();
  }
  return h;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).is_identity();
}

Perm PermGroup::random_element(uint64_t seed) const {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 12345);
  Perm g(degree_);
  for (auto& lvl : chain_) {
    size_t pick = rng() % lvl.orbit.size();
    g = lvl.transversal(lvl.orbit[pick], degree_) * g;
  }
  return g;
}

std::vector<Perm> PermGroup::elements(unsigned long long cap) const {
  require(order_ <= cap, "TooLarge",
          "group of order " + std::to_string(order_) + " exceeds enumeration cap");
  std::vector<Perm> result = {Perm(degree_)};
  for (size_t i = chain_.size(); i-- > 0;) {
    std::vector<Perm> next;
    next.reserve(result.size() * chain_[i].orbit.size());
    for (Point x : chain_[i].orbit) {
      Perm u = chain_[i].transversal(x, degree_);
      for (auto& r : result) next.push_back(r * u);
    }
    result = std::move(next);
  }
  return result;
}

std::vector<Point> PermGroup::orbit_of(Point x) const {
  std::vector<Point> orbit = {x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (size_t h = 0; h < orbit.size(); ++h)
    for (auto& g : gens_) {
      Point y = g[orbit[h]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> result;
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto orb = orbit_of(x);
    for (Point y : orb) seen[y] = true;
    result.push_back(std::move(orb));
  }
  return result;
}

std::vector<int> PermGroup::factorize(const Perm& g) const {
  require(contains(g), "ElementNotInGroup", "factorize: element outside group");
  if (g.is_identity()) return {};
  // BFS word search over the original generators; only used on small groups
  // (quotient lifting), so the enumeration bound is generous.
  require(order_ <= 1000000, "TooLarge", "factorize cap");
  std::unordered_set<Perm, PermHash> seen;
  struct Node {
    Perm g;
    std::vector<int> word;
  };
  std::vector<Node> queue;
  queue.push_back({Perm(degree_), {}});
  seen.insert(queue[0].g);
  for (size_t head = 0; head < queue.size(); ++head) {
    Node cur = queue[head];
    for (size_t gi = 0; gi < gens_.size(); ++gi) {
      Perm next = cur.g * gens_[gi];
      if (seen.insert(next).second) {
        auto w = cur.word;
        w.push_back(static_cast<int>(gi));
        if (next == g) return w;
        queue.push_back({std::move(next), std::move(w)});
      }
    }
  }
  fail("ElementNotInGroup", "word search failed");
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  for (auto& x : gens_)
    if (!g.contains(x)) return false;
  return true;
}

std::vector<unsigned> prime_factors(unsigned long long n) {
  std::vector<unsigned> ps;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(static_cast<unsigned>(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(static_cast<unsigned>(n));
  return ps;
}

}  // namespace cgt::perm
