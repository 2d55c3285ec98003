#pragma once

#include "ghom/fpmodule.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>

namespace ghom {

/* Minimal graded free resolution, extended lazily and cached.  Copies share
   the underlying state; extension is serialized by a mutex so the memo is
   safe under concurrent first computation.  Returned references stay valid
   across later extensions. */
class FreeResolution {
public:
    explicit FreeResolution(FPModule M);

    const FPModule& target() const;

    // ensure differentials 1..n exist, unless the resolution stops earlier
    void extend(int n);
    int computed() const;   // differentials built so far
    bool finished() const;  // a syzygy computation came out empty
    // index of the last nonzero free module; only meaningful once finished
    // (-1 for the zero module)
    int length() const;

    // generator degrees of F_i; extends on demand, empty past a finished end
    const std::vector<int64_t>& free_degrees(int i);
    // d_i : F_i -> F_{i-1} for 1 <= i <= computed()
    const GradedMatrix& differential(int i);
    // F_0 -> M in the generator coordinates of M
    const GradedMatrix& augmentation() const;

    int64_t betti(int i);
    std::map<int64_t, int64_t> graded_betti(int i);

    /* i-th syzygy as a presented module: generators are those of F_i,
       relations the columns of d_{i+1}.  syzygy_module(0) is the minimized
       module itself. */
    FPModule syzygy_module(int i);

private:
    struct Data;
    std::shared_ptr<Data> d_;
};

} // namespace ghom
