#pragma once

#include <string>
#include <vector>

#include "quatgeo/affine.hpp"
#include "quatgeo/qmatrix.hpp"

namespace quatgeo {

// Human-editable text format. Example:
//
//   quatgeo v1
//   backend exact
//
//   # pure translation by (0, 1)
//   gen A = [1, 0, 0] [0, 1, 1] [0, 0, 1]
//   gen S = [1, 0, 1/2j] [0, -1, i] [0, 0, 1]
//   mat M = [2, 0] [0, 3]
//
// Quaternion entries are sums of terms "c", "ci", "cj", "ck" with rational
// or decimal coefficients c. `gen` entries must be affine (last row
// (0,...,0,1)); `mat` entries are arbitrary square matrices. All numbers are
// stored exactly; the backend directive tells commands which arithmetic to
// run.
enum class Backend { Exact, Float };

struct FileEntry {
  std::string name;
  bool affine = true;  // gen vs mat
  QMatrix<Rat> matrix;
};

struct GeneratorFile {
  int version = 1;
  Backend backend = Backend::Exact;
  std::vector<FileEntry> entries;

  // Entries tagged `gen`, as affine maps.
  std::vector<AffineMap<Rat>> generator_maps() const;
  std::vector<std::string> generator_labels() const;
};

GeneratorFile parse_generator_file(const std::string& text);  // ParseError
std::string render_generator_file(const GeneratorFile& f);

Quat<Rat> parse_quaternion(const std::string& text);  // ParseError
std::string render_quaternion(const Quat<Rat>& q);
std::string render_quaternion(const Quat<double>& q);

std::string render_matrix(const QMatrix<Rat>& m);

// "(q1, q2)" with quaternion literal components.
QVec<Rat> parse_point(const std::string& text, int dim);

// One quaternion literal per line; # comments and blank lines are skipped.
std::vector<Quat<Rat>> parse_quaternion_lines(const std::string& text);

}  // namespace quatgeo
