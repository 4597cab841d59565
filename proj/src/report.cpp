#include "quatgeo/report.hpp"

#include <sstream>

#include "quatgeo/generator_file.hpp"

namespace quatgeo {

namespace {

std::string point_str(const QVec<Rat>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += render_quaternion(p[i]);
  }
  return s + ")";
}

std::string image_str(const std::vector<Quat<Rat>>& image) {
  std::string s;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i) s += ", ";
    s += render_quaternion(image[i]);
  }
  return s;
}

}  // namespace

std::string render_report_text(const ExplorationReport& r) {
  std::ostringstream os;
  os << "group exploration report\n";
  os << "  generators: " << r.labels.size() << " (";
  for (std::size_t i = 0; i < r.labels.size(); ++i)
    os << (i ? ", " : "") << r.labels[i];
  os << ")\n";
  os << "  max word length: " << r.max_word_length << "\n";
  os << "  elements found: " << r.elements_found
     << (r.closed ? " (closed: full group reached)" : "") << "\n";

  os << "  freeness: ";
  if (r.freeness.free_up_to_length)
    os << "free up to word length " << r.max_word_length << "\n";
  else
    os << "VIOLATED by " << word_str(r.freeness.witness, r.labels)
       << ", fixed point " << point_str(r.freeness.fixed_point) << "\n";

  os << "  unipotent: " << (r.all_unipotent ? "all elements" : "NO") << "\n";
  if (r.non_unipotent_witness)
    os << "    witness: " << word_str(*r.non_unipotent_witness, r.labels)
       << "\n";
  for (const auto& [label, cert] : r.generator_unipotency) {
    os << "    " << label << ": ";
    if (cert)
      os << "unipotent, (g-1)^" << *cert << " = 0\n";
    else
      os << "not unipotent\n";
  }

  if (!r.phi_defined) {
    os << "  phi: undefined (generator " << r.phi_failure_label
       << " is not G2-shaped)\n";
  } else {
    os << "  phi image: {" << image_str(r.phi_image) << "}";
    if (!r.phi_image_unit_norm) os << "  [contains non-unit values]";
    os << "\n";
    if (r.phi_image_class)
      os << "  phi image class: " << r.phi_image_class->name() << "\n";
    os << "  kernel generators (" << r.kernel_words.size() << "):\n";
    for (std::size_t i = 0; i < r.kernel_words.size(); ++i) {
      os << "    " << word_str(r.kernel_words[i], r.labels);
      if (i < r.kernel_generators.size())
        os << " = " << render_matrix(r.kernel_generators[i].as_matrix());
      os << "\n";
    }
  }

  os << "  translation rank: " << r.translations.rank << " (from "
     << r.translations.samples << " elements)"
     << (r.compact_necessary_condition ? ", spans the whole space" : "")
     << "\n";
  for (const auto& note : r.notes) os << "  note: " << note << "\n";
  return os.str();
}

std::string render_report_kv(const ExplorationReport& r) {
  std::ostringstream os;
  os << "report.version 1\n";
  os << "group.generators " << r.labels.size() << "\n";
  for (std::size_t i = 0; i < r.labels.size(); ++i)
    os << "group.label." << i << " " << r.labels[i] << "\n";
  os << "group.max_word_length " << r.max_word_length << "\n";
  os << "group.element_cap " << r.element_cap << "\n";
  os << "group.elements_found " << r.elements_found << "\n";
  os << "group.closed " << (r.closed ? "true" : "false") << "\n";

  os << "freeness.status "
     << (r.freeness.free_up_to_length ? "free-up-to-length" : "violated")
     << "\n";
  if (!r.freeness.free_up_to_length) {
    os << "freeness.witness.word " << word_str(r.freeness.witness, r.labels)
       << "\n";
    os << "freeness.witness.point " << point_str(r.freeness.fixed_point)
       << "\n";
  }

  os << "unipotent.all " << (r.all_unipotent ? "true" : "false") << "\n";
  if (r.non_unipotent_witness)
    os << "unipotent.witness " << word_str(*r.non_unipotent_witness, r.labels)
       << "\n";
  for (const auto& [label, cert] : r.generator_unipotency)
    os << "unipotent.generator." << label << " "
       << (cert ? std::to_string(*cert) : std::string("none")) << "\n";

  os << "phi.defined " << (r.phi_defined ? "true" : "false") << "\n";
  if (!r.phi_defined) {
    os << "phi.failure_witness " << r.phi_failure_label << "\n";
  } else {
    os << "phi.image.size " << r.phi_image.size() << "\n";
    for (std::size_t i = 0; i < r.phi_image.size(); ++i)
      os << "phi.image." << i << " " << render_quaternion(r.phi_image[i])
         << "\n";
    os << "phi.image.unit_norm " << (r.phi_image_unit_norm ? "true" : "false")
       << "\n";
    if (r.phi_image_class)
      os << "phi.image.class " << r.phi_image_class->name() << "\n";
    os << "kernel.generators " << r.kernel_words.size() << "\n";
    for (std::size_t i = 0; i < r.kernel_words.size(); ++i) {
      os << "kernel.word." << i << " " << word_str(r.kernel_words[i], r.labels)
         << "\n";
      if (i < r.kernel_generators.size())
        os << "kernel.matrix." << i << " "
           << render_matrix(r.kernel_generators[i].as_matrix()) << "\n";
    }
  }

  os << "translation.rank " << r.translations.rank << "\n";
  os << "translation.samples " << r.translations.samples << "\n";
  os << "translation.compact_necessary_condition "
     << (r.compact_necessary_condition ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < r.notes.size(); ++i)
    os << "note." << i << " " << r.notes[i] << "\n";
  return os.str();
}

}  // namespace quatgeo
