#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <unordered_map>
#include <vector>

#include "mf/frame.hpp"

namespace mf {

// Which critical simplex to cancel when several carry a removable label.
enum class PickPolicy { min_lex, latest };

// State of the annotation scan: the current frame, the per-dimension live
// sets (critical simplexes labelled by themselves), and an inverted carrier
// index (label -> simplexes carrying it).
class AnnotationState {
public:
    explicit AnnotationState(std::shared_ptr<const Complex> K);

    const Complex& complex() const { return frame_.complex(); }
    const Frame& frame() const { return frame_; }
    std::size_t steps_done() const { return steps_done_; }

    // live critical p-simplexes, lex order
    std::vector<Simplex> live(int p) const;
    std::vector<std::vector<Simplex>> live_by_dimension() const;
    std::vector<std::size_t> live_counts() const;

    // label of a cycle z; equal labels characterize homologous cycles.
    // Throws if z is not a cycle of the scanned part of the complex.
    Chain cycle_class(const Chain& z) const;

    // the fiber of a live critical simplex: all simplexes carrying it;
    // a cocycle whose class is part of a cohomology basis
    Chain cocycle_fiber(const Simplex& tau) const;

private:
    friend AnnotationState annotate(const MorseSequence&, PickPolicy,
                                    const std::function<void(const AnnotationState&,
                                                             std::size_t)>&);

    void set_label(const Simplex& s, Chain value);
    const std::set<Simplex>& carriers(const Simplex& label) const;

    Frame frame_;
    std::vector<std::set<Simplex>> live_;  // [p]
    std::unordered_map<Simplex, std::set<Simplex>, SimplexHash> carriers_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> birth_;
    std::unordered_map<Simplex, bool, SimplexHash> seen_;
    std::size_t steps_done_ = 0;
};

using AnnotationObserver = std::function<void(const AnnotationState&, std::size_t)>;

// Runs the annotation construction along W: a critical simplex whose boundary
// label is zero opens a class; one whose boundary label is nonzero closes a
// class by sweeping the picked label out of every annotation; a regular pair
// propagates labels like the reference. The observer, if set, is called after
// every step.
AnnotationState annotate(const MorseSequence& W, PickPolicy pick = PickPolicy::min_lex,
                         const AnnotationObserver& observer = {});

}  // namespace mf
