#pragma once

#include <vector>

#include "mf/annotation.hpp"
#include "mf/frame.hpp"

namespace mf {

struct Cancellation {
    Simplex removed_label;  // the label swept out of the annotations
    Simplex critical;       // the critical simplex whose boundary carried it
};

struct PerfectFrame {
    Frame frame;                      // final frame; differs from the input
                                      // reference only on the support
    std::vector<Simplex> support;     // critical simplexes plus their boundary
                                      // faces, sorted
    std::vector<int> betti;           // count of self-labelled criticals per dim
    std::vector<Cancellation> trace;  // fired cancellations, in scan order
};

// Two-pass Betti computation: starting from the reference, scan the sequence
// and cancel a label pair whenever a critical simplex has a nonzero boundary
// label, touching only simplexes in the support. The resulting frame is
// perfect: self-labelled criticals count the Betti numbers.
// F must be the reference of W.
PerfectFrame perfect_frame(const MorseSequence& W, const Frame& F,
                           PickPolicy pick = PickPolicy::min_lex);

// frames with zero boundary label on every critical simplex are perfect
bool is_perfect(const MorseSequence& W, const Frame& F);

}  // namespace mf
