#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quatgeo/affine.hpp"
#include "quatgeo/s3_finite.hpp"

namespace quatgeo {

// Desk-scale analysis of finitely generated subgroups of Aff(2,H). Exact
// arithmetic is mandatory: element equality must be decidable for
// deduplication, so the engine only accepts the rational backend.
using ExactAffine = AffineMap<Rat>;

struct GeneratedGroup {
  std::vector<ExactAffine> generators;
  std::vector<std::string> labels;  // same length; used in reports

  int dim() const { return generators.empty() ? 2 : generators[0].dim(); }
};

// Word in the generators: 1-based signed indices, +k for generator k-1,
// -k for its inverse. The empty word is the identity.
using Word = std::vector<int>;

std::string word_str(const Word& w, const std::vector<std::string>& labels);
Word word_inverse(const Word& w);

struct EnumerateOptions {
  int max_word_length = 6;
  std::size_t element_cap = 100000;
  bool parallel = true;
};

struct GroupElement {
  ExactAffine map;
  Word word;  // a shortest witnessing word, lexicographic tie-break
};

struct EnumerationResult {
  std::vector<GroupElement> elements;  // index 0 is the identity
  bool closed = false;  // the whole (finite) group was reached before L
  int max_word_length = 0;

  std::optional<std::size_t> find(const ExactAffine& m) const;
};

// Breadth-first closure over generators and inverses up to word length L,
// deduplicated; throws ExplosionCap beyond the element cap. The parallel
// engine expands each frontier with OpenMP and merges deterministically, so
// both engines return identical results.
EnumerationResult enumerate_group(const GeneratedGroup& g,
                                  const EnumerateOptions& opts = {});
EnumerationResult enumerate_serial(const GeneratedGroup& g,
                                   const EnumerateOptions& opts = {});
EnumerationResult enumerate_parallel(const GeneratedGroup& g,
                                     const EnumerateOptions& opts = {});

// A bounded certificate, never a proof: "free up to word length L", or a
// witness word together with one of its fixed points.
struct FreenessVerdict {
  bool free_up_to_length = true;
  Word witness;
  QVec<Rat> fixed_point;
};

FreenessVerdict freeness_probe(const EnumerationResult& e);

// Smallest k <= dim+1 with (g - 1)^k = 0 on the (n+1) x (n+1) form, or
// nullopt when g is not unipotent.
std::optional<int> unipotency_check(const ExactAffine& g);

// The homomorphism to unit quaternions reading off the (2,2) entry of a
// G2-shaped element. ShapeError if the element is not G2-shaped. |d| != 1
// is legal here (it signals broken compactness hypotheses, not a bug) and
// is flagged by the callers that care.
Quat<Rat> phi(const ExactAffine& g);

struct KernelResult {
  std::vector<Quat<Rat>> image;       // closure of phi(generators)
  std::vector<Word> coset_rep_words;  // shortest-lex words, image[i]-indexed
  std::vector<Word> kernel_words;     // Schreier generators of ker phi
  std::vector<ExactAffine> kernel_generators;
};

// Schreier generators r_q g r_{q phi(g)}^-1 over shortest-word coset
// representatives. Throws ShapeError if a generator is not G2-shaped and
// ImageNotFinite if the image closure exceeds the cap.
KernelResult kernel_subgroup(const GeneratedGroup& g,
                             std::size_t image_cap = 10000);

struct TranslationRank {
  int rank = 0;  // of the real span in R^8
  std::vector<QVec<Rat>> basis;  // translation parts realizing the rank
  std::size_t samples = 0;
};

// Real rank of the translational parts (r, s) of enumerated elements whose
// holonomy has second row (0, 1) -- the shape whose translations must span
// all of H^2 whenever the quotient is compact.
TranslationRank translation_rank(const EnumerationResult& e);

// Orbit of a point under the commutator sequence C_n = A^-n B A^n B^-1,
// computed through the closed form; a numerical witness against proper
// discontinuity when d has infinite multiplicative order.
struct OrbitProbe {
  std::vector<QVec<double>> points;          // C_n p for n = 1..N
  std::vector<double> dist_to_base;          // |C_n p - p|
  std::vector<std::pair<int, double>> min_record;  // strictly decreasing record
  int distinct_maps = 0;                     // distinct C_n up to kEpsRec
  double min_pairwise = 0;                   // over the orbit points
  double max_point_norm = 0;
};

OrbitProbe orbit_accumulation_probe(const AffineMap<double>& a,
                                    const AffineMap<double>& b,
                                    const QVec<double>& p, int iterations);

// Min distance over all point pairs; the quadratic loop runs under OpenMP
// when `parallel` is set and serially otherwise, with identical results.
double min_pairwise_distance(const std::vector<QVec<double>>& pts,
                             bool parallel = true);

// Everything the analyze pipeline produces. Every claim carries a finite
// witness that re-verifies independently.
struct ExplorationReport {
  std::vector<std::string> labels;
  int max_word_length = 0;
  std::size_t element_cap = 0;
  std::size_t elements_found = 0;
  bool closed = false;

  FreenessVerdict freeness;

  bool all_unipotent = true;
  std::optional<Word> non_unipotent_witness;
  std::vector<std::pair<std::string, std::optional<int>>> generator_unipotency;

  bool phi_defined = true;        // false when a generator is not G2-shaped
  std::string phi_failure_label;  // witness generator
  std::vector<Quat<Rat>> phi_image;
  bool phi_image_unit_norm = true;
  std::optional<FiniteS3Class> phi_image_class;
  std::vector<Word> kernel_words;
  std::vector<ExactAffine> kernel_generators;  // the words, evaluated

  TranslationRank translations;
  bool compact_necessary_condition = false;  // rank == 4 * dim

  std::vector<std::string> notes;
};

ExplorationReport explore(const GeneratedGroup& g,
                          const EnumerateOptions& opts = {});

}  // namespace quatgeo
