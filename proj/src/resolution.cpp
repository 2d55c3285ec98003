#include "ghom/resolution.hpp"

#include <stdexcept>

namespace ghom {

struct FreeResolution::Data {
    FPModule M;
    GradedMatrix aug;
    std::deque<std::vector<int64_t>> degs; // degs[i] for F_i
    std::deque<GradedMatrix> diff;         // diff[i-1] = d_i
    bool done = false;
    std::mutex mu;

    explicit Data(FPModule m) : M(std::move(m)) {}
};

FreeResolution::FreeResolution(FPModule M) : d_(std::make_shared<Data>(std::move(M))) {
    const MinimizedPresentation& mp = d_->M.minimized();
    d_->degs.push_back(mp.module.gen_degrees());
    d_->aug = mp.new_to_old;
    if (d_->degs[0].empty()) d_->done = true;
}

const FPModule& FreeResolution::target() const { return d_->M; }

void FreeResolution::extend(int n) {
    std::lock_guard<std::mutex> lock(d_->mu);
    const GradedRing& R = d_->M.ring();
    while ((int)d_->diff.size() < n && !d_->done) {
        std::vector<SparseVec> cols;
        if (d_->diff.empty()) {
            const GradedMatrix& rel = d_->M.minimized().module.relations();
            std::vector<SparseVec> cand;
            for (int j = 0; j < rel.ncols(); ++j) cand.push_back(rel.col(j));
            cols = minimal_generators(R, d_->degs[0], std::move(cand), {});
        } else {
            cols = kernel_gens(d_->diff.back());
        }
        if (cols.empty()) {
            d_->done = true;
            break;
        }
        const std::vector<int64_t>& rdeg = d_->degs.back();
        std::vector<int64_t> cdeg;
        for (const auto& c : cols) cdeg.push_back(*sv_degree(c, rdeg));
        GradedMatrix m(R, rdeg, cdeg, cols);
        if (!m.entries_in_max_ideal())
            throw std::logic_error("resolution differential picked up a unit entry");
        d_->degs.push_back(std::move(cdeg));
        d_->diff.push_back(std::move(m));
    }
}

int FreeResolution::computed() const { return (int)d_->diff.size(); }
bool FreeResolution::finished() const { return d_->done; }

int FreeResolution::length() const {
    if (!d_->done) throw std::logic_error("resolution length queried before it stopped");
    return (int)d_->degs.size() - 1 - (d_->degs[0].empty() ? 1 : 0);
}

const std::vector<int64_t>& FreeResolution::free_degrees(int i) {
    if (i < 0) throw std::out_of_range("negative homological degree");
    extend(i);
    static const std::vector<int64_t> empty;
    if (i >= (int)d_->degs.size()) return empty;
    return d_->degs[i];
}

const GradedMatrix& FreeResolution::differential(int i) {
    if (i < 1) throw std::out_of_range("differential index starts at 1");
    extend(i);
    if (i > (int)d_->diff.size())
        throw std::out_of_range("differential beyond the end of the resolution");
    return d_->diff[i - 1];
}

const GradedMatrix& FreeResolution::augmentation() const { return d_->aug; }

int64_t FreeResolution::betti(int i) { return (int64_t)free_degrees(i).size(); }

std::map<int64_t, int64_t> FreeResolution::graded_betti(int i) {
    std::map<int64_t, int64_t> out;
    for (int64_t dg : free_degrees(i)) ++out[dg];
    return out;
}

FPModule FreeResolution::syzygy_module(int i) {
    extend(i + 1);
    std::vector<int64_t> rdeg = free_degrees(i);
    if (i + 1 > (int)d_->diff.size())
        return FPModule::cokernel(GradedMatrix(d_->M.ring(), rdeg, {}));
    return FPModule::cokernel(d_->diff[i]);
}

} // namespace ghom
