#include "cgap/fid.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cgap/error.hpp"

namespace cgap {

namespace {

std::uint64_t ceil_log2(std::uint64_t u) { return static_cast<std::uint64_t>(std::bit_width(u - 1)); }

} // namespace

std::uint64_t fid_select_stride(std::uint64_t u) {
    const std::uint64_t l = ceil_log2(u);
    return l * l;
}

std::uint64_t fid_block_width(std::uint64_t n, std::uint64_t u) {
    if (n == 0 || u < 2) {
        throw domain_error("block width needs n >= 1 and u >= 2");
    }
    const unsigned __int128 num = static_cast<unsigned __int128>(u) * fid_select_stride(u);
    const unsigned __int128 v = (num + n - 1) / n;
    return v >= u ? u : static_cast<std::uint64_t>(v);
}

Fid Fid::build(const SortedSet& s) {
    if (s.empty()) {
        throw domain_error("cannot build an index over an empty set");
    }
    if (s.universe() < 2) {
        throw domain_error("index needs a universe of at least 2");
    }
    Fid f;
    f.u_ = s.universe();
    f.n_ = s.size();
    f.v_ = fid_block_width(f.n_, f.u_);
    f.stride_ = fid_select_stride(f.u_);

    const GapStream g = gaps_from_set(s);
    f.codebook_ = std::make_shared<const Codebook>(Codebook::build(g.gaps));

    const auto el = s.elements();
    const std::uint64_t nb = (f.u_ + f.v_ - 1) / f.v_;
    BitString occ;
    f.ranks_.assign(nb, 0);
    std::size_t idx = 0;
    for (std::uint64_t b = 0; b < nb; ++b) {
        f.ranks_[b] = idx;
        const std::uint64_t lo = b * f.v_;
        const std::uint64_t hi = lo + f.v_; // may exceed u for the last block
        std::vector<std::uint64_t> rel;
        while (idx < el.size() && el[idx] < hi) {
            rel.push_back(el[idx] - lo);
            ++idx;
        }
        occ.push_back(!rel.empty());
        if (!rel.empty()) {
            // Only gaps between two elements of the same block get encoded, and
            // those are global gaps, so the shared codebook covers them; a
            // block-straddling gap would surface here as unknown_symbol.
            f.blocks_.emplace_back(rel, f.v_, f.codebook_);
        }
    }
    f.occupancy_ = RsBitvector(std::move(occ));

    for (std::uint64_t i = 0; i < f.n_; i += f.stride_) {
        f.sel_.push_back(el[i] / f.v_);
    }
    return f;
}

std::uint64_t Fid::rank(std::uint64_t x, QueryStats* stats) const {
    if (x >= u_) {
        throw range_error("rank argument " + std::to_string(x) + " outside [0, " + std::to_string(u_) + ")");
    }
    const std::uint64_t b = x / v_;
    if (!occupancy_[b]) {
        return ranks_[b];
    }
    const Bsd& block = blocks_[occupancy_.rank1(b) - 1];
    return ranks_[b] + block.rank(x - b * v_, stats);
}

std::uint64_t Fid::select(std::uint64_t i, QueryStats* stats) const {
    if (i >= n_) {
        throw range_error("select index " + std::to_string(i) + " outside [0, " + std::to_string(n_) + ")");
    }
    const std::uint64_t s = i / stride_;
    const std::uint64_t ql = sel_[s];
    // For the last sample the remaining elements may run past SEL's last block,
    // so the search extends to the last nonempty block.
    const std::uint64_t qr = s + 1 < sel_.size() ? sel_[s + 1] : occupancy_.select1(occupancy_.ones() - 1);

    // Largest nonempty block j in [ql, qr] with R[j] <= i, searched over V's ones.
    std::uint64_t lo = occupancy_.rank1(ql) - 1;
    std::uint64_t hi = occupancy_.rank1(qr) - 1;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (stats) {
            ++stats->probes;
        }
        if (ranks_[occupancy_.select1(mid)] <= i) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    if (stats) {
        ++stats->probes;
    }
    const std::uint64_t qm = occupancy_.select1(lo);
    return qm * v_ + blocks_[lo].select(i - ranks_[qm], stats);
}

unsigned Fid::rank_width() const noexcept { return width_for(n_); }

unsigned Fid::select_sample_width() const noexcept { return width_for(block_count() - 1); }

FidSpace Fid::space() const {
    FidSpace sp;
    for (const Bsd& b : blocks_) {
        sp.streams += b.stream().length();
        sp.heads += b.heads_bits();
        sp.pointers += b.pointers_bits();
    }
    sp.occupancy = occupancy_.payload_bits();
    sp.ranks = ranks_.size() * std::uint64_t{rank_width()};
    sp.select_samples = sel_.size() * std::uint64_t{select_sample_width()};
    sp.codebook = codebook_->serialized_bits();
    return sp;
}

SortedSet Fid::to_set() const {
    std::vector<std::uint64_t> out;
    out.reserve(n_);
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        const std::uint64_t base = occupancy_.select1(j) * v_;
        for (std::uint64_t x : blocks_[j].values()) {
            out.push_back(base + x);
        }
    }
    return SortedSet(u_, std::move(out));
}

} // namespace cgap
