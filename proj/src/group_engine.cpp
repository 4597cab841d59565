#include "quatgeo/group_engine.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "quatgeo/errors.hpp"

namespace quatgeo {

namespace {

// Letter order fixes the lexicographic tie-break for shortest words: each
// generator is followed by its inverse, generators in label order.
std::vector<int> alphabet(std::size_t k) {
  std::vector<int> letters;
  letters.reserve(2 * k);
  for (std::size_t i = 1; i <= k; ++i) {
    letters.push_back(static_cast<int>(i));
    letters.push_back(-static_cast<int>(i));
  }
  return letters;
}

struct LetterMaps {
  std::vector<ExactAffine> maps;  // indexed by letter via slot()
  static std::size_t slot(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }
};

LetterMaps letter_maps(const GeneratedGroup& g) {
  LetterMaps lm;
  lm.maps.reserve(2 * g.generators.size());
  for (const auto& gen : g.generators) {
    lm.maps.push_back(gen);
    lm.maps.push_back(gen.inverse());  // NotInvertible on singular holonomy
  }
  return lm;
}

struct ElementIndex {
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;

  std::optional<std::size_t> find(const std::vector<GroupElement>& elems,
                                  const ExactAffine& m, std::size_t h) const {
    auto it = buckets.find(h);
    if (it == buckets.end()) return std::nullopt;
    for (std::size_t idx : it->second)
      if (elems[idx].map == m) return idx;
    return std::nullopt;
  }

  void add(std::size_t h, std::size_t idx) { buckets[h].push_back(idx); }
};

template <class ExpandFrontier>
EnumerationResult enumerate_impl(const GeneratedGroup& g,
                                 const EnumerateOptions& opts,
                                 ExpandFrontier&& expand) {
  if (g.generators.empty()) {
    EnumerationResult r;
    r.elements.push_back({ExactAffine::identity(2), {}});
    r.closed = true;
    r.max_word_length = opts.max_word_length;
    return r;
  }

  EnumerationResult result;
  result.max_word_length = opts.max_word_length;
  ElementIndex index;

  ExactAffine id = ExactAffine::identity(g.dim());
  result.elements.push_back({id, {}});
  index.add(id.hash(), 0);

  std::vector<std::size_t> frontier = {0};
  LetterMaps lm = letter_maps(g);
  std::vector<int> letters = alphabet(g.generators.size());

  for (int length = 1; length <= opts.max_word_length && !frontier.empty();
       ++length) {
    std::vector<std::size_t> next;
    auto merge = [&](const ExactAffine& prod, std::size_t h,
                     std::size_t parent, int letter) {
      if (index.find(result.elements, prod, h)) return;
      if (result.elements.size() >= opts.element_cap)
        throw ExplosionCap("element cap " + std::to_string(opts.element_cap) +
                           " exceeded at word length " + std::to_string(length));
      Word w = result.elements[parent].word;
      w.push_back(letter);
      index.add(h, result.elements.size());
      next.push_back(result.elements.size());
      result.elements.push_back({prod, std::move(w)});
    };
    expand(result.elements, frontier, letters, lm, merge);
    if (next.empty()) {
      result.closed = true;
      break;
    }
    frontier = std::move(next);
  }
  return result;
}

// Serial reference expansion: products in (frontier, letter) order.
struct SerialExpand {
  template <class Merge>
  void operator()(const std::vector<GroupElement>& elems,
                  const std::vector<std::size_t>& frontier,
                  const std::vector<int>& letters, const LetterMaps& lm,
                  Merge&& merge) const {
    for (std::size_t parent : frontier)
      for (int letter : letters) {
        ExactAffine prod = elems[parent].map * lm.maps[LetterMaps::slot(letter)];
        std::size_t h = prod.hash();
        merge(prod, h, parent, letter);
      }
  }
};

// Parallel expansion: the products of one frontier block are computed with
// OpenMP, then merged serially in the same (frontier, letter) order as the
// serial engine, so the two engines agree element for element.
struct ParallelExpand {
  template <class Merge>
  void operator()(const std::vector<GroupElement>& elems,
                  const std::vector<std::size_t>& frontier,
                  const std::vector<int>& letters, const LetterMaps& lm,
                  Merge&& merge) const {
    const std::size_t width = letters.size();
    const std::size_t total = frontier.size() * width;
    constexpr std::size_t kBlock = 4096;

    std::vector<ExactAffine> prods;
    std::vector<std::size_t> hashes;
    for (std::size_t base = 0; base < total; base += kBlock) {
      const std::size_t count = std::min(kBlock, total - base);
      prods.assign(count, ExactAffine());
      hashes.assign(count, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (long long i = 0; i < static_cast<long long>(count); ++i) {
        std::size_t task = base + static_cast<std::size_t>(i);
        std::size_t parent = frontier[task / width];
        int letter = letters[task % width];
        prods[i] = elems[parent].map * lm.maps[LetterMaps::slot(letter)];
        hashes[i] = prods[i].hash();
      }
      for (std::size_t i = 0; i < count; ++i) {
        std::size_t task = base + i;
        merge(prods[i], hashes[i], frontier[task / width],
              letters[task % width]);
      }
    }
  }
};

}  // namespace

std::string word_str(const Word& w, const std::vector<std::string>& labels) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    int idx = std::abs(w[i]) - 1;
    s += idx < static_cast<int>(labels.size()) ? labels[idx]
                                               : "g" + std::to_string(idx + 1);
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

Word word_inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& l : r) l = -l;
  return r;
}

std::optional<std::size_t> EnumerationResult::find(const ExactAffine& m) const {
  std::size_t h = m.hash();
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].map.hash() == h && elements[i].map == m) return i;
  return std::nullopt;
}

EnumerationResult enumerate_serial(const GeneratedGroup& g,
                                   const EnumerateOptions& opts) {
  return enumerate_impl(g, opts, SerialExpand{});
}

EnumerationResult enumerate_parallel(const GeneratedGroup& g,
                                     const EnumerateOptions& opts) {
  return enumerate_impl(g, opts, ParallelExpand{});
}

EnumerationResult enumerate_group(const GeneratedGroup& g,
                                  const EnumerateOptions& opts) {
  return opts.parallel ? enumerate_parallel(g, opts) : enumerate_serial(g, opts);
}

FreenessVerdict freeness_probe(const EnumerationResult& e) {
  for (const auto& el : e.elements) {
    if (el.word.empty()) continue;  // identity fixes everything by definition
    FixedPointSet<Rat> fps = fixed_points(el.map);
    if (!fps.empty()) return {false, el.word, fps.point};
    // Elements without fixed points must have 1 in the holonomy spectrum:
    // (h - I) singular is forced, otherwise the affine system would have
    // been solvable. A violation here is a solver bug, not a finding.
    QMatrix<Rat> shifted = el.map.h - QMatrix<Rat>::identity(el.map.dim());
    if (!det_psi(shifted).is_zero())
      throw InternalInconsistency(
          "element without fixed points has invertible h - I");
  }
  return {};
}

std::optional<int> unipotency_check(const ExactAffine& g) {
  int n = g.dim() + 1;
  QMatrix<Rat> nil = g.as_matrix() - QMatrix<Rat>::identity(n);
  QMatrix<Rat> power = nil;
  for (int k = 1; k <= n; ++k) {
    if (power.is_zero()) return k;
    power = power * nil;
  }
  return std::nullopt;
}

Quat<Rat> phi(const ExactAffine& g) { return g2_parts(g).d; }

KernelResult kernel_subgroup(const GeneratedGroup& g, std::size_t image_cap) {
  KernelResult res;
  std::vector<Quat<Rat>> gen_values;
  for (const auto& gen : g.generators) {
    Quat<Rat> d = phi(gen);
    // |d| != 1 makes <d> infinite (|d^n| is strictly monotone), so the
    // image cannot close; fail immediately instead of walking to the cap.
    if (!(d.norm_sq() == Rat(1)))
      throw ImageNotFinite("phi value of a generator has |d| != 1; the image "
                           "is not finite");
    gen_values.push_back(std::move(d));
  }

  // BFS over the image group; the visiting order yields shortest-lex coset
  // representative words for free.
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
  auto find_image = [&](const Quat<Rat>& q) -> std::optional<std::size_t> {
    auto it = buckets.find(q.hash());
    if (it == buckets.end()) return std::nullopt;
    for (std::size_t i : it->second)
      if (res.image[i] == q) return i;
    return std::nullopt;
  };
  auto add_image = [&](const Quat<Rat>& q) {
    buckets[q.hash()].push_back(res.image.size());
    res.image.push_back(q);
  };

  add_image(Quat<Rat>(Rat(1)));
  res.coset_rep_words.push_back({});
  std::vector<int> letters = alphabet(g.generators.size());
  for (std::size_t at = 0; at < res.image.size(); ++at) {
    Quat<Rat> base = res.image[at];
    Word base_word = res.coset_rep_words[at];
    for (int letter : letters) {
      std::size_t gi = static_cast<std::size_t>(std::abs(letter)) - 1;
      Quat<Rat> v = letter > 0 ? gen_values[gi] : gen_values[gi].inverse();
      Quat<Rat> next = base * v;
      if (find_image(next)) continue;
      if (res.image.size() >= image_cap)
        throw ImageNotFinite("phi image did not close within cap " +
                             std::to_string(image_cap));
      add_image(next);
      Word w = base_word;
      w.push_back(letter);
      res.coset_rep_words.push_back(std::move(w));
    }
  }

  auto eval_word = [&](const Word& w) {
    ExactAffine m = ExactAffine::identity(g.dim());
    for (int letter : w) {
      std::size_t gi = static_cast<std::size_t>(std::abs(letter)) - 1;
      m = m * (letter > 0 ? g.generators[gi] : g.generators[gi].inverse());
    }
    return m;
  };

  // Schreier generators r_q g_i r_{q phi(g_i)}^-1.
  for (std::size_t q = 0; q < res.image.size(); ++q) {
    for (std::size_t gi = 0; gi < g.generators.size(); ++gi) {
      Quat<Rat> target = res.image[q] * gen_values[gi];
      std::size_t t = *find_image(target);
      Word w = res.coset_rep_words[q];
      w.push_back(static_cast<int>(gi) + 1);
      Word back = word_inverse(res.coset_rep_words[t]);
      w.insert(w.end(), back.begin(), back.end());

      ExactAffine el = eval_word(w);
      if (!(phi(el) == Quat<Rat>(Rat(1))))
        throw InternalInconsistency("Schreier generator escapes the kernel");
      if (el.is_identity()) continue;
      bool seen = false;
      for (const auto& k : res.kernel_generators)
        if (k == el) {
          seen = true;
          break;
        }
      if (!seen) {
        res.kernel_generators.push_back(std::move(el));
        res.kernel_words.push_back(std::move(w));
      }
    }
  }
  return res;
}

TranslationRank translation_rank(const EnumerationResult& e) {
  TranslationRank tr;
  if (e.elements.empty()) return tr;
  int n = e.elements[0].map.dim();
  int width = 4 * n;

  // Incremental row reduction over Q.
  std::vector<std::vector<Rat>> reduced;
  std::vector<int> pivots;

  auto coords = [&](const QVec<Rat>& t) {
    std::vector<Rat> v;
    v.reserve(width);
    for (const auto& q : t) {
      v.push_back(q.w);
      v.push_back(q.x);
      v.push_back(q.y);
      v.push_back(q.z);
    }
    return v;
  };

  for (const auto& el : e.elements) {
    // Only elements whose holonomy fixes the later coordinates contribute:
    // rows below the first must match the identity.
    bool shape_ok = true;
    for (int i = 1; i < n && shape_ok; ++i)
      for (int j = 0; j < n && shape_ok; ++j)
        if (!(el.map.h.at(i, j) ==
              (i == j ? Quat<Rat>(Rat(1)) : Quat<Rat>())))
          shape_ok = false;
    if (!shape_ok) continue;
    ++tr.samples;
    if (tr.rank == width) continue;  // keep counting, stop reducing

    std::vector<Rat> v = coords(el.map.t);
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if (v[pivots[r]].is_zero()) continue;
      Rat f = v[pivots[r]] / reduced[r][pivots[r]];
      for (int j = 0; j < width; ++j) v[j] -= f * reduced[r][j];
    }
    int pivot = -1;
    for (int j = 0; j < width; ++j)
      if (!v[j].is_zero()) {
        pivot = j;
        break;
      }
    if (pivot < 0) continue;
    reduced.push_back(std::move(v));
    pivots.push_back(pivot);
    tr.basis.push_back(el.map.t);
    ++tr.rank;
  }
  return tr;
}

double min_pairwise_distance(const std::vector<QVec<double>>& pts,
                             bool parallel) {
  const long long n = static_cast<long long>(pts.size());
  double best = std::numeric_limits<double>::infinity();
  if (n < 2) return best;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best) \
    if (parallel)
#endif
  for (long long i = 0; i < n - 1; ++i)
    for (long long j = i + 1; j < n; ++j) {
      double d = vec_norm(vec_sub(pts[i], pts[j]));
      if (d < best) best = d;
    }
  return best;
}

OrbitProbe orbit_accumulation_probe(const AffineMap<double>& a,
                                    const AffineMap<double>& b,
                                    const QVec<double>& p, int iterations) {
  OrbitProbe probe;
  std::vector<AffineMap<double>> maps;
  maps.reserve(iterations);
  for (int n = 1; n <= iterations; ++n)
    maps.push_back(commutator_sequence(a, b, n));  // DegenerateD when d = 1

  double running = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= iterations; ++n) {
    QVec<double> pt = maps[n - 1].act(p);
    double dist = vec_norm(vec_sub(pt, p));
    probe.points.push_back(std::move(pt));
    probe.dist_to_base.push_back(dist);
    if (dist < running) {
      running = dist;
      probe.min_record.emplace_back(n, dist);
    }
    probe.max_point_norm =
        std::max(probe.max_point_norm, vec_norm(probe.points.back()));
  }

  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    bool fresh = true;
    for (std::size_t r : reps) {
      const auto& mi = maps[i];
      const auto& mr = maps[r];
      double d = 0;
      for (int row = 0; row < 2; ++row)
        for (int col = 0; col < 2; ++col)
          d += (mi.h.at(row, col) - mr.h.at(row, col)).norm_sq();
      d += vec_norm_sq(vec_sub(mi.t, mr.t));
      if (std::sqrt(d) <= kEpsRec) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(i);
  }
  probe.distinct_maps = static_cast<int>(reps.size());
  probe.min_pairwise = min_pairwise_distance(probe.points, true);
  return probe;
}

ExplorationReport explore(const GeneratedGroup& g,
                          const EnumerateOptions& opts) {
  ExplorationReport rep;
  rep.labels = g.labels;
  for (std::size_t i = rep.labels.size(); i < g.generators.size(); ++i)
    rep.labels.push_back("g" + std::to_string(i + 1));
  rep.max_word_length = opts.max_word_length;
  rep.element_cap = opts.element_cap;

  EnumerationResult e = enumerate_group(g, opts);
  rep.elements_found = e.elements.size();
  rep.closed = e.closed;

  rep.freeness = freeness_probe(e);

  for (const auto& el : e.elements) {
    std::optional<int> cert = unipotency_check(el.map);
    if (!cert && rep.all_unipotent) {
      rep.all_unipotent = false;
      rep.non_unipotent_witness = el.word;
    }
  }
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    rep.generator_unipotency.emplace_back(rep.labels[i],
                                          unipotency_check(g.generators[i]));

  try {
    std::vector<Quat<Rat>> values;
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
      rep.phi_failure_label = rep.labels[i];
      values.push_back(phi(g.generators[i]));
    }
    rep.phi_failure_label.clear();
    for (const auto& d : values)
      if (!(d.norm_sq() == Rat(1))) rep.phi_image_unit_norm = false;
    if (!rep.phi_image_unit_norm) {
      // A non-unit value means the image is infinite; report the raw
      // generator values instead of a closure. This is a finding about the
      // group (its compact-quotient hypotheses fail), not an error.
      rep.phi_image = values;
    } else {
      KernelResult kr = kernel_subgroup(g);
      rep.phi_image = kr.image;
      rep.kernel_words = kr.kernel_words;
      rep.kernel_generators = kr.kernel_generators;
      std::vector<Quat<double>> img;
      for (const auto& q : rep.phi_image) img.push_back(to_double(q));
      rep.phi_image_class = s3_recognize(img);
    }
  } catch (const ShapeError&) {
    rep.phi_defined = false;
  }

  rep.translations = translation_rank(e);
  rep.compact_necessary_condition = rep.translations.rank == 4 * g.dim();

  rep.notes.push_back(
      "freeness verdict is bounded: checked for words up to length " +
      std::to_string(opts.max_word_length) + " only, never a proof");
  rep.notes.push_back(
      "compactness of the quotient is not decidable here; full translation "
      "rank (" +
      std::to_string(4 * g.dim()) +
      ") is a necessary condition only");
  if (rep.translations.rank < 4 * g.dim())
    rep.notes.push_back(
        "translation rank " + std::to_string(rep.translations.rank) + " < " +
        std::to_string(4 * g.dim()) +
        ": quotient not compact (translations of a cocompact group must span "
        "the whole space over R)");
  if (!rep.phi_image_unit_norm)
    rep.notes.push_back(
        "phi image contains a non-unit quaternion: the group violates the "
        "compact-quotient hypotheses");
  return rep;
}

}  // namespace quatgeo
