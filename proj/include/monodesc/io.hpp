#pragma once

#include <string>
#include <vector>

#include "monodesc/monodromy.hpp"
#include "monodesc/realize.hpp"

namespace monodesc {

// All numeric text output uses 15 significant digits so reports are diffable.
std::string fmt_g(double x);
std::string fmt_complex(std::complex<double> v);
std::string fmt_cmat(const CMat& m);

std::string read_text_file(const std::string& path);                      // BadInput
void write_text_file(const std::string& path, const std::string& body);   // BadInput

// Loop files: {"loops": [{"base": [re,im], "vertices": [[re,im], ...]}, ...]}
std::string loops_to_text(const std::vector<Loop>& loops);
std::vector<Loop> loops_from_text(const std::string& text);               // BadInput

// Representation dump: base, loops, and one matrix per loop, each matrix a
// row-major grid of [re,im] pairs.
std::string rep_to_text(const MonodromyRep& rep);

// Target files: {"points": [[re,im], ...], "generators": [matrix, ...],
// "base": optional real}
TargetData targets_from_text(const std::string& text);                    // BadInput

}  // namespace monodesc
