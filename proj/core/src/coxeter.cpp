#include "metacover/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "metacover/error.hpp"

namespace metacover::coxeter {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Mat Mat::identity(int rank) {
  Mat m;
  for (int i = 0; i < rank; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r;
  int acc[kMaxRank][kMaxRank] = {};
  for (int i = 0; i < kMaxRank; ++i)
    for (int k = 0; k < kMaxRank; ++k) {
      int v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < kMaxRank; ++j) acc[i][j] += v * o.at(k, j);
    }
  for (int i = 0; i < kMaxRank; ++i)
    for (int j = 0; j < kMaxRank; ++j) r.set(i, j, acc[i][j]);
  return r;
}

Coords Mat::apply(const Coords& v) const {
  Coords r{};
  for (int i = 0; i < kMaxRank; ++i) {
    int s = 0;
    for (int j = 0; j < kMaxRank; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

std::size_t AffineElementHash::operator()(const AffineElement& x) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto b : x.w.a) h = (h ^ static_cast<std::uint8_t>(b)) * 1099511628211ull;
  for (int v : x.y) h = (h ^ static_cast<std::size_t>(v + 4096)) * 1099511628211ull;
  return h;
}

AffineWeylGroup::AffineWeylGroup(const roots::RootSystem& sys) : sys_(sys) {
  const int r = sys_.rank();
  positive_ = sys_.positive_roots();
  all_roots_ = sys_.roots();
  const Coords& theta = sys_.highest_root();
  int l = 1;
  for (int i = 0; i < r; ++i) l = std::lcm(l, theta[i]);
  for (int i = 0; i < r; ++i) bary_[i] = 2 * l / theta[i];
  scale_ = (r + 1) * l;

  Mat st = Mat::identity(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int theta_row_j = 0;
      for (int k = 0; k < r; ++k) theta_row_j += theta[k] * sys_.cartan(k, j);
      st.set(i, j, st.at(i, j) - theta[i] * theta_row_j);
    }
  Coords two_theta{};
  for (int i = 0; i < r; ++i) two_theta[i] = 2 * theta[i];
  gens_.push_back(AffineElement{st, st, two_theta});
  for (int s = 0; s < r; ++s) {
    Mat m = Mat::identity(r);
    for (int j = 0; j < r; ++j) m.set(s, j, m.at(s, j) - sys_.cartan(s, j));
    gens_.push_back(AffineElement{m, m, Coords{}});
  }

  const roots::LatticeTable table = roots::Ytilde_mod_2Y(sys_);
  for (const Coords& v : table.representatives) {
    OmegaElement om;
    om.element = reduced_word(translation(v)).omega;
    om.parity = v;
    // Walls of 2A: node 0 is <theta, v> = 2, node i is <alpha_i, v> = 0.
    std::vector<std::pair<Coords, int>> walls;
    walls.push_back({theta, 2});
    for (int i = 0; i < r; ++i) {
      Coords a{};
      a[i] = 1;
      walls.push_back({a, 0});
    }
    for (int node = 0; node <= r; ++node) {
      Coords image = om.element.w.apply(walls[node].first);
      int k = walls[node].second + sys_.pairing(image, om.element.y);
      if (!roots::RootSystem::is_positive(image)) {
        for (int& c : image) c = -c;
        k = -k;
      }
      auto it = std::find(walls.begin(), walls.end(), std::make_pair(image, k));
      if (it == walls.end()) fail(ErrorKind::Internal, "length-zero element does not permute walls");
      om.node_map[node] = static_cast<int>(it - walls.begin());
    }
    omega_.push_back(om);
  }
}

AffineElement AffineWeylGroup::identity() const {
  Mat one = Mat::identity(rank());
  return AffineElement{one, one, Coords{}};
}

AffineElement AffineWeylGroup::generator(int s) const {
  require(s >= 0 && s <= rank(), "generator index out of range");
  return gens_[s];
}

AffineElement AffineWeylGroup::translation(const Coords& y) const {
  require(roots::in_Y_tilde(sys_, y), "translation is not in Y~");
  AffineElement x = identity();
  x.y = y;
  return x;
}

AffineElement AffineWeylGroup::finite(const Mat& w, const Mat& winv) const {
  return AffineElement{w, winv, Coords{}};
}

AffineElement AffineWeylGroup::multiply(const AffineElement& a, const AffineElement& b) const {
  AffineElement r;
  r.w = a.w * b.w;
  r.winv = b.winv * a.winv;
  Coords wy = a.w.apply(b.y);
  for (int i = 0; i < kMaxRank; ++i) r.y[i] = a.y[i] + wy[i];
  return r;
}

AffineElement AffineWeylGroup::inverse(const AffineElement& a) const {
  AffineElement r;
  r.w = a.winv;
  r.winv = a.w;
  Coords t = a.winv.apply(a.y);
  for (int i = 0; i < kMaxRank; ++i) r.y[i] = -t[i];
  return r;
}

Coords AffineWeylGroup::act(const AffineElement& x, const Coords& p, int denom) const {
  Coords r = x.w.apply(p);
  for (int i = 0; i < kMaxRank; ++i) r[i] += denom * x.y[i];
  return r;
}

int AffineWeylGroup::length_tilde(const AffineElement& x) const {
  const int period = 2 * scale_;
  int total = 0;
  for (const Coords& alpha : positive_) {
    Coords beta = x.winv.apply(alpha);
    int b = scale_ * sys_.pairing(alpha, x.y);
    for (int i = 0; i < rank(); ++i) b += beta[i] * bary_[i];
    total += std::abs(floor_div(b, period));
  }
  return total;
}

int AffineWeylGroup::length_tilde_formula(const AffineElement& x) const {
  int total = 0;
  for (const Coords& alpha : positive_) {
    int half = sys_.pairing(alpha, x.y) / 2;
    Coords beta = x.winv.apply(alpha);
    total += roots::RootSystem::is_positive(beta) ? std::abs(half) : std::abs(half - 1);
  }
  return total;
}

int AffineWeylGroup::length_two(const AffineElement& x) const {
  auto f = [](const Coords& root) { return roots::RootSystem::is_positive(root) ? 0 : 2; };
  int total = 0;
  for (const Coords& alpha : all_roots_) {
    Coords beta = x.winv.apply(alpha);
    int fx = f(beta) - sys_.pairing(alpha, x.y);
    total += std::max(0, fx - f(alpha));
  }
  return total;
}

ReducedWord AffineWeylGroup::reduced_word(const AffineElement& x) const {
  AffineElement cur = x;
  int len = length_tilde(cur);
  std::vector<int> taken;
  while (len > 0) {
    bool moved = false;
    for (int s = 0; s <= rank() && !moved; ++s) {
      AffineElement next = multiply(gens_[s], cur);
      int l2 = length_tilde(next);
      if (l2 < len) {
        taken.push_back(s);
        cur = next;
        len = l2;
        moved = true;
      }
    }
    if (!moved) fail(ErrorKind::Internal, "no descent found for a positive-length element");
  }
  return ReducedWord{cur, taken};
}

AffineElement AffineWeylGroup::from_word(const AffineElement& omega, const std::vector<int>& word) const {
  AffineElement x = omega;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = multiply(generator(*it), x);
  return x;
}

std::vector<std::vector<int>> AffineWeylGroup::all_reduced_words(const AffineElement& x) const {
  const int len = length_tilde(x);
  if (len == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int s = 0; s <= rank(); ++s) {
    AffineElement next = multiply(gens_[s], x);
    if (length_tilde(next) >= len) continue;
    for (auto w : all_reduced_words(next)) {
      w.insert(w.begin(), s);
      out.push_back(std::move(w));
    }
  }
  return out;
}

int AffineWeylGroup::omega_index(const AffineElement& omega) const {
  for (std::size_t i = 0; i < omega_.size(); ++i)
    if (omega_[i].element == omega) return static_cast<int>(i);
  fail(ErrorKind::InvalidArgument, "element is not of length zero");
}

int AffineWeylGroup::braid_order(int s, int t) const {
  const AffineElement st = multiply(generator(s), generator(t));
  AffineElement p = st;
  const AffineElement one = identity();
  for (int k = 1; k <= 12; ++k) {
    if (p == one) return k;
    p = multiply(p, st);
  }
  fail(ErrorKind::Internal, "generator product of unexpectedly large order");
}

std::vector<AffineElement> AffineWeylGroup::enumerate(int max_len) const {
  std::vector<AffineElement> affine{identity()};
  std::unordered_set<AffineElement, AffineElementHash> seen{identity()};
  std::vector<AffineElement> level{identity()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<AffineElement> next;
    for (const auto& x : level)
      for (int s = 0; s <= rank(); ++s) {
        AffineElement y = multiply(x, gens_[s]);
        if (seen.count(y)) continue;
        if (length_tilde(y) != len) continue;
        seen.insert(y);
        next.push_back(y);
      }
    affine.insert(affine.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<AffineElement> out;
  for (const auto& x : affine)
    for (const auto& om : omega_) out.push_back(multiply(om.element, x));
  return out;
}

std::string AffineWeylGroup::describe(const AffineElement& x) const {
  ReducedWord rw = reduced_word(x);
  std::ostringstream os;
  for (int s : rw.word) os << "s" << (s == 0 ? std::string("af") : std::to_string(s)) << " ";
  os << "omega" << omega_index(rw.omega);
  return os.str();
}

bool braid_connected(const AffineWeylGroup& group, const std::vector<std::vector<int>>& words) {
  if (words.empty()) return true;
  std::set<std::vector<int>> target(words.begin(), words.end());
  std::set<std::vector<int>> seen{words.front()};
  std::vector<std::vector<int>> queue{words.front()};
  const int n = group.generator_count();
  std::vector<std::vector<int>> order(n, std::vector<int>(n, 1));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t) order[s][t] = group.braid_order(s, t);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<int> w = queue[head];
    for (std::size_t start = 0; start < w.size(); ++start)
      for (int t = 0; t < n; ++t) {
        const int s = w[start];
        if (s == t) continue;
        const int m = order[s][t];
        if (start + m > w.size()) continue;
        bool match = true;
        for (int k = 0; k < m && match; ++k) match = w[start + k] == (k % 2 == 0 ? s : t);
        if (!match) continue;
        std::vector<int> v = w;
        for (int k = 0; k < m; ++k) v[start + k] = (k % 2 == 0 ? t : s);
        if (seen.insert(v).second) queue.push_back(v);
      }
  }
  for (const auto& w : target)
    if (!seen.count(w)) return false;
  return true;
}

}  // namespace metacover::coxeter
