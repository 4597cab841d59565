#include "quatgeo/s3_finite.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>

#include "quatgeo/errors.hpp"
#include "quatgeo/tolerances.hpp"

namespace quatgeo {

namespace {

constexpr std::size_t kClosureCap = 10000;
constexpr double kGrid = 1e-6;

// Set of unit quaternions with grid-quantized hashing: coordinates are
// snapped to a 1e-6 grid and neighbor cells are probed on lookup, so two
// numerical copies of the same element always meet. An audit pass re-checks
// all merges by distance after closure.
class UnitQuatSet {
 public:
  std::size_t size() const { return elems_.size(); }
  const std::vector<Quat<double>>& elements() const { return elems_; }

  std::optional<std::size_t> find(const Quat<double>& q) const {
    std::array<long long, 4> key = keyed(q);
    std::array<long long, 4> probe;
    for (int dw = -1; dw <= 1; ++dw)
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy)
          for (int dz = -1; dz <= 1; ++dz) {
            probe = {key[0] + dw, key[1] + dx, key[2] + dy, key[3] + dz};
            auto it = cells_.find(probe);
            if (it == cells_.end()) continue;
            if (quat_dist(elems_[it->second], q) <= kEpsRec) return it->second;
          }
    return std::nullopt;
  }

  // Returns true if the element was new.
  bool insert(const Quat<double>& q) {
    if (find(q)) return false;
    std::size_t idx = elems_.size();
    elems_.push_back(q);
    cells_.emplace(keyed(q), idx);
    return true;
  }

  // Distinct stored elements must stay well separated; a violation means the
  // grid merged things it should not have (or failed to merge duplicates).
  void audit() const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
      for (std::size_t j = i + 1; j < elems_.size(); ++j)
        if (quat_dist(elems_[i], elems_[j]) <= kEpsRec)
          throw ClosureError("closure audit: two stored elements collide");
  }

 private:
  static std::array<long long, 4> keyed(const Quat<double>& q) {
    return {llround(q.w / kGrid), llround(q.x / kGrid), llround(q.y / kGrid),
            llround(q.z / kGrid)};
  }
  std::vector<Quat<double>> elems_;
  std::map<std::array<long long, 4>, std::size_t> cells_;
};

std::vector<Quat<double>> closure(const std::vector<Quat<double>>& gens) {
  UnitQuatSet set;
  set.insert(Quat<double>(1.0));
  for (const auto& g : gens) set.insert(g);

  // Worklist: when an element is processed it is multiplied against every
  // element present at that moment (both sides); later arrivals pair up when
  // their own turn comes. Copies guard against vector growth.
  std::size_t next = 0;
  while (next < set.size()) {
    Quat<double> e = set.elements()[next];
    ++next;
    for (std::size_t i = 0; i < set.size(); ++i) {
      Quat<double> a = set.elements()[i];
      for (const Quat<double>& p : {e * a, a * e}) {
        if (set.find(p)) continue;
        if (set.size() >= kClosureCap)
          throw ClosureError(
              "closure exceeded 10^4 elements; tolerance bug suspected");
        set.insert(p);
      }
    }
  }
  set.audit();
  return set.elements();
}

int element_order(const std::vector<Quat<double>>& s, const Quat<double>& q) {
  Quat<double> one(1.0);
  Quat<double> p = q;
  for (std::size_t k = 1; k <= 2 * s.size() + 1; ++k) {
    if (quat_dist(p, one) <= kEpsRec) return static_cast<int>(k);
    p = p * q;
  }
  throw NotAGroup("element order exceeds twice the set size");
}

}  // namespace

std::string FiniteS3Class::name() const {
  using Tag = FiniteS3Class::Tag;
  switch (tag) {
    case Tag::TwoI: return "2I";
    case Tag::TwoO: return "2O";
    case Tag::TwoT: return "2T";
    case Tag::TwoD: return "2D" + std::to_string(2 * n);
    case Tag::TwoC: return "2C" + std::to_string(n);
    case Tag::OneC: return "1C" + std::to_string(n);
  }
  return "?";
}

std::size_t FiniteS3Class::expected_order() const {
  using Tag = FiniteS3Class::Tag;
  switch (tag) {
    case Tag::TwoI: return 120;
    case Tag::TwoO: return 48;
    case Tag::TwoT: return 24;
    case Tag::TwoD: return 4 * static_cast<std::size_t>(n);
    case Tag::TwoC: return 2 * static_cast<std::size_t>(n);
    case Tag::OneC: return static_cast<std::size_t>(n);
  }
  return 0;
}

std::optional<FiniteS3Class> parse_s3_class(const std::string& text) {
  using Tag = FiniteS3Class::Tag;
  if (text == "2I") return FiniteS3Class{Tag::TwoI};
  if (text == "2O") return FiniteS3Class{Tag::TwoO};
  if (text == "2T") return FiniteS3Class{Tag::TwoT};
  auto param = [&](std::size_t off) -> std::optional<int> {
    if (text.size() <= off) return std::nullopt;
    int v = 0;
    for (std::size_t i = off; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
      v = v * 10 + (text[i] - '0');
    }
    return v > 0 ? std::optional<int>(v) : std::nullopt;
  };
  if (text.rfind("2D", 0) == 0) {
    auto sub = param(2);
    if (!sub || *sub % 2 != 0) return std::nullopt;  // subscript is 2n
    return FiniteS3Class{Tag::TwoD, *sub / 2};
  }
  if (text.rfind("2C", 0) == 0) {
    auto sub = param(2);
    if (!sub) return std::nullopt;
    return FiniteS3Class{Tag::TwoC, *sub};
  }
  if (text.rfind("1C", 0) == 0) {
    auto sub = param(2);
    if (!sub) return std::nullopt;
    return FiniteS3Class{Tag::OneC, *sub};
  }
  return std::nullopt;
}

Quat<double> s3_i_icosahedral() {
  double sigma = (std::sqrt(5.0) - 1.0) / 2.0;
  double tau = (std::sqrt(5.0) + 1.0) / 2.0;
  return {0.0, 0.5, sigma / 2.0, tau / 2.0};
}

Quat<double> s3_i_octahedral() {
  double r = 1.0 / std::sqrt(2.0);
  return {0.0, 0.0, r, r};
}

Quat<double> s3_i_tetrahedral() { return Quat<double>::unit_i(); }

Quat<double> s3_omega() { return {-0.5, 0.5, 0.5, 0.5}; }

Quat<double> s3_e(double n) {
  double a = std::numbers::pi / n;
  return {std::cos(a), std::sin(a), 0.0, 0.0};
}

Quat<double> s3_j() { return Quat<double>::unit_j(); }

std::vector<Quat<double>> s3_build(const FiniteS3Class& cls) {
  using Tag = FiniteS3Class::Tag;
  std::vector<Quat<double>> gens;
  switch (cls.tag) {
    case Tag::TwoI: gens = {s3_i_icosahedral(), s3_omega()}; break;
    case Tag::TwoO: gens = {s3_i_octahedral(), s3_omega()}; break;
    case Tag::TwoT: gens = {s3_i_tetrahedral(), s3_omega()}; break;
    case Tag::TwoD:
      if (cls.n < 1) throw InvalidArgument("2D needs n >= 1");
      gens = {s3_e(cls.n), s3_j()};
      break;
    case Tag::TwoC:
      if (cls.n < 1) throw InvalidArgument("2C needs n >= 1");
      gens = {s3_e(cls.n)};
      break;
    case Tag::OneC:
      if (cls.n < 1 || cls.n % 2 == 0)
        throw InvalidArgument(
            "1C is defined for odd n only; even parameters are not part of "
            "the classification");
      gens = {s3_e(cls.n / 2.0)};
      break;
  }
  return closure(gens);
}

bool s3_contains(const std::vector<Quat<double>>& s, const Quat<double>& q) {
  for (const auto& e : s)
    if (quat_dist(e, q) <= kEpsRec) return true;
  return false;
}

S3Signature s3_signature(const std::vector<Quat<double>>& s) {
  if (s.empty()) throw NotAGroup("empty set");
  for (const auto& q : s)
    if (std::abs(quat_norm(q) - 1.0) > kEpsRec)
      throw NotAGroup("set contains a non-unit quaternion");
  if (!s3_contains(s, Quat<double>(1.0))) throw NotAGroup("identity missing");
  for (const auto& a : s) {
    if (!s3_contains(s, a.conj())) throw NotAGroup("set not closed under inverses");
    for (const auto& b : s)
      if (!s3_contains(s, a * b)) throw NotAGroup("set not closed under products");
  }

  S3Signature sig;
  sig.order = s.size();
  for (const auto& a : s) {
    sig.element_orders.push_back(element_order(s, a));
    for (const auto& b : s)
      if (quat_dist(a * b, b * a) > kEpsRec) sig.abelian = false;
  }
  std::sort(sig.element_orders.begin(), sig.element_orders.end());
  return sig;
}

std::optional<FiniteS3Class> s3_recognize(const std::vector<Quat<double>>& s) {
  using Tag = FiniteS3Class::Tag;
  S3Signature sig = s3_signature(s);
  std::size_t n = sig.order;

  std::vector<FiniteS3Class> candidates;
  if (n % 2 == 1) candidates.push_back({Tag::OneC, static_cast<int>(n)});
  if (n % 2 == 0) candidates.push_back({Tag::TwoC, static_cast<int>(n / 2)});
  if (n % 4 == 0) candidates.push_back({Tag::TwoD, static_cast<int>(n / 4)});
  if (n == 24) candidates.push_back({Tag::TwoT});
  if (n == 48) candidates.push_back({Tag::TwoO});
  if (n == 120) candidates.push_back({Tag::TwoI});

  std::vector<FiniteS3Class> matches;
  for (const auto& c : candidates)
    if (s3_signature(s3_build(c)) == sig) matches.push_back(c);

  if (matches.empty()) return std::nullopt;
  if (matches.size() == 1) return matches.front();

  // The only signature coincidence in range: 2D_2 and 2C_2 are the same
  // subgroup up to conjugation. Canonicalize to the cyclic tag.
  bool coincidence =
      matches.size() == 2 &&
      ((matches[0].tag == Tag::TwoD && matches[1].tag == Tag::TwoC) ||
       (matches[0].tag == Tag::TwoC && matches[1].tag == Tag::TwoD)) &&
      n == 4;
  if (coincidence) return FiniteS3Class{Tag::TwoC, 2};
  return std::nullopt;  // multiple matches outside the known coincidence
}

}  // namespace quatgeo
