#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <vector>

#include "cgap/bsd.hpp"
#include "cgap/codec.hpp"
#include "cgap/gapcore.hpp"
#include "cgap/rs_bitvector.hpp"

namespace cgap {

// Payload sizes of a Fid in bits. Their sum equals the serialized size minus
// framing (magic, header integers, section widths and lengths, byte padding).
struct FidSpace {
    std::uint64_t streams = 0;        // delta-of-ord streams of all blocks
    std::uint64_t heads = 0;          // explicit run heads
    std::uint64_t pointers = 0;       // run pointers into the streams
    std::uint64_t occupancy = 0;      // V with its rank/select directory
    std::uint64_t ranks = 0;          // R
    std::uint64_t select_samples = 0; // SEL
    std::uint64_t codebook = 0;       // D

    std::uint64_t total() const noexcept {
        return streams + heads + pointers + occupancy + ranks + select_samples + codebook;
    }
};

struct SerializedFid {
    std::vector<std::uint8_t> bytes;
    std::uint64_t payload_bits = 0;
    std::uint64_t framing_bits = 0;
};

// Two-level fully-indexable dictionary over a sorted set.
//
// The universe is cut into blocks of width v = ceil(u * L^2 / n), L = ceil(log2 u),
// capped at u. Each nonempty block holds a Bsd over its values relative to the
// block start, all sharing one codebook built from the global gap stream. V marks
// the nonempty blocks, R[b] counts the elements before block b, and SEL[i] is the
// block holding element i * L^2.
class Fid {
public:
    static constexpr char magic[4] = {'C', 'G', 'F', '1'};
    static constexpr std::uint8_t format_version = 1;

    Fid() = default;

    // Throws domain_error for an empty set or a universe below 2.
    static Fid build(const SortedSet& s);

    std::uint64_t universe() const noexcept { return u_; }
    std::uint64_t size() const noexcept { return n_; }
    std::uint64_t block_width() const noexcept { return v_; }
    std::uint64_t select_stride() const noexcept { return stride_; }
    std::uint64_t block_count() const noexcept { return occupancy_.size(); }

    // Number of elements <= x. Throws range_error for x >= universe().
    std::uint64_t rank(std::uint64_t x, QueryStats* stats = nullptr) const;
    // (i+1)-th smallest element. Throws range_error for i >= size().
    std::uint64_t select(std::uint64_t i, QueryStats* stats = nullptr) const;

    const Codebook& codebook() const noexcept { return *codebook_; }
    const RsBitvector& occupancy() const noexcept { return occupancy_; }
    std::span<const std::uint64_t> sampled_ranks() const noexcept { return ranks_; }
    std::span<const std::uint64_t> select_samples() const noexcept { return sel_; }
    // Bsds of the nonempty blocks, in block order.
    std::span<const Bsd> blocks() const noexcept { return blocks_; }

    unsigned rank_width() const noexcept;
    unsigned select_sample_width() const noexcept;

    FidSpace space() const;
    SortedSet to_set() const;

    SerializedFid serialize_counted() const;
    std::vector<std::uint8_t> serialize() const { return serialize_counted().bytes; }
    // Throws format_error on a bad magic, version or inconsistent section.
    static Fid deserialize(std::span<const std::uint8_t> bytes);

    void save(const std::filesystem::path& path) const;
    static Fid load(const std::filesystem::path& path);

private:
    std::uint64_t u_ = 0;
    std::uint64_t n_ = 0;
    std::uint64_t v_ = 0;
    std::uint64_t stride_ = 0;
    std::shared_ptr<const Codebook> codebook_;
    RsBitvector occupancy_;
    std::vector<std::uint64_t> ranks_;
    std::vector<std::uint64_t> sel_;
    std::vector<Bsd> blocks_;
};

// Block width and select stride for a set of n elements out of u.
std::uint64_t fid_block_width(std::uint64_t n, std::uint64_t u);
std::uint64_t fid_select_stride(std::uint64_t u);

} // namespace cgap
