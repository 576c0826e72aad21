#include "vmlab/flip.hpp"

#include <algorithm>
#include <sstream>

namespace vmlab {

Flip::Flip(int k, std::map<VertexId, int> iota, std::vector<std::vector<std::uint8_t>> tau)
    : k_(k), iota_(std::move(iota)), tau_(std::move(tau)) {
  if (k_ <= 0) throw DomainError("flip needs a positive class count");
  if (static_cast<int>(tau_.size()) != k_)
    throw DomainError("tau must be a k x k table");
  for (const auto& row : tau_)
    if (static_cast<int>(row.size()) != k_)
      throw DomainError("tau must be a k x k table");
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) {
      if (tau_[i][j] > 1) throw DomainError("tau entries must be 0 or 1");
      if (tau_[i][j] != tau_[j][i]) throw DomainError("tau must be symmetric");
    }
  for (const auto& [v, c] : iota_)
    if (c < 1 || c > k_)
      throw DomainError("iota value " + std::to_string(c) + " outside [1.." +
                        std::to_string(k_) + "]");
}

Flip Flip::identity(int k, std::map<VertexId, int> iota) {
  return Flip(k, std::move(iota),
              std::vector<std::vector<std::uint8_t>>(k, std::vector<std::uint8_t>(k, 0)));
}

int Flip::class_of(VertexId v) const {
  auto it = iota_.find(v);
  if (it == iota_.end())
    throw DomainError("vertex " + std::to_string(v) + " outside the flip's domain");
  return it->second;
}

bool Flip::tau(int i, int j) const {
  if (i < 1 || i > k_ || j < 1 || j > k_) throw DomainError("tau index out of range");
  return tau_[i - 1][j - 1] != 0;
}

bool Flip::tau_all_zero() const {
  for (const auto& row : tau_)
    for (auto b : row)
      if (b) return false;
  return true;
}

Graph apply_flip(const Graph& g, const Flip& f) {
  // Group g's vertices by class, then XOR whole class pairs.
  std::map<int, VertexSet> classes;
  for (VertexId v : g.vertices()) classes[f.class_of(v)].insert(v);
  GraphBuilder b(g);
  for (auto it = classes.begin(); it != classes.end(); ++it) {
    if (f.tau(it->first, it->first)) b.complement_within(it->second);
    for (auto jt = std::next(it); jt != classes.end(); ++jt)
      if (f.tau(it->first, jt->first)) b.toggle_between(it->second, jt->second);
  }
  return b.build();
}

std::vector<VertexSet> flip_classes_of(const Flip& f, const VertexSet& x) {
  std::map<int, VertexSet> traces;
  for (VertexId v : x) traces[f.class_of(v)].insert(v);
  std::vector<VertexSet> out;
  out.reserve(traces.size());
  for (auto& [c, t] : traces) out.push_back(std::move(t));
  return out;
}

bool is_homogeneous(const Graph& g, const Flip& f, const VertexSet& x) {
  // value per class pair: -1 unseen, else 0/1
  std::map<std::pair<int, int>, int> seen;
  std::vector<VertexId> xs(x.begin(), x.end());
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j) {
      int ci = f.class_of(xs[i]), cj = f.class_of(xs[j]);
      auto key = std::minmax(ci, cj);
      int adj = g.adjacent(xs[i], xs[j]) ? 1 : 0;
      auto [it, fresh] = seen.emplace(key, adj);
      if (!fresh && it->second != adj) return false;
    }
  return true;
}

bool is_compatible_on(const Flip& f1, const Flip& f2, const VertexSet& x) {
  auto family = [&](const Flip& f) {
    auto parts = flip_classes_of(f, x);
    std::sort(parts.begin(), parts.end());
    return parts;
  };
  return family(f1) == family(f2);
}

Flip clean_flip(const Graph& g, const Flip& f, const VertexSet& i) {
  if (!g.is_independent(i))
    throw PreconditionError("clean_flip: the set must be independent in g");
  int k = f.class_count();
  std::map<VertexId, int> iota2;
  for (const auto& [v, c] : f.iota()) iota2[v] = c + (i.count(v) ? k : 0);
  std::vector<std::vector<std::uint8_t>> tau2(2 * k, std::vector<std::uint8_t>(2 * k, 0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ci = 1; ci <= k; ++ci)
        for (int cj = 1; cj <= k; ++cj) {
          bool both_tagged = (a == 1 && b == 1);
          tau2[ci - 1 + a * k][cj - 1 + b * k] = both_tagged ? 0 : (f.tau(ci, cj) ? 1 : 0);
        }
  return Flip(2 * k, std::move(iota2), std::move(tau2));
}

std::string flip_to_text(const Flip& f) {
  std::ostringstream out;
  out << f.class_count() << ' ' << f.iota().size() << '\n';
  for (const auto& [v, c] : f.iota()) out << v << ' ' << c << '\n';
  for (int i = 1; i <= f.class_count(); ++i) {
    for (int j = i; j <= f.class_count(); ++j) {
      if (j > i) out << ' ';
      out << (f.tau(i, j) ? 1 : 0);
    }
    out << '\n';
  }
  return out.str();
}

Flip flip_from_text(const std::string& text) {
  std::istringstream in(text);
  int k = 0;
  long t = 0;
  if (!(in >> k >> t)) throw ValidationError("flip header: expected 'k t'");
  std::map<VertexId, int> iota;
  for (long x = 0; x < t; ++x) {
    VertexId v;
    int c;
    if (!(in >> v >> c)) throw ValidationError("flip body: expected 'id class' line");
    iota[v] = c;
  }
  if (static_cast<long>(iota.size()) != t)
    throw ValidationError("flip body: duplicate vertex ids in the iota table");
  std::vector<std::vector<std::uint8_t>> tau(k, std::vector<std::uint8_t>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      int b;
      if (!(in >> b) || (b != 0 && b != 1))
        throw ValidationError("flip body: expected tau bit");
      tau[i][j] = tau[j][i] = static_cast<std::uint8_t>(b);
    }
  return Flip(k, std::move(iota), std::move(tau));
}

}  // namespace vmlab
