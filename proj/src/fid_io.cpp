// CGF1 index container. Layout (integers little-endian, bit arrays MSB-first
// and zero-padded to a byte boundary); see docs/FORMAT.md.
#include <algorithm>
#include <fstream>
#include <iterator>
#include <string>

#include "cgap/byte_io.hpp"
#include "cgap/error.hpp"
#include "cgap/fid.hpp"

namespace cgap {

namespace {

void write_packed(ByteWriter& out, std::span<const std::uint64_t> values, unsigned width) {
    out.frame_u8(static_cast<std::uint8_t>(width));
    out.payload_bits(pack_fixed(values, width));
}

std::vector<std::uint64_t> read_packed(ByteReader& in, std::size_t count, unsigned expected_width,
                                       const char* what) {
    const unsigned width = in.u8();
    if (width != expected_width) {
        throw format_error(std::string(what) + " width " + std::to_string(width) + ", expected " +
                           std::to_string(expected_width));
    }
    if (count > 0 && count > (std::uint64_t{1} << 58) / width) {
        throw format_error(std::string(what) + " count is implausible");
    }
    return unpack_fixed(in.bits(count * width), width, count);
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0); }

} // namespace

SerializedFid Fid::serialize_counted() const {
    ByteWriter out;
    out.frame_bytes({reinterpret_cast<const std::uint8_t*>(magic), sizeof magic});
    out.frame_u8(format_version);
    out.frame_u64(u_);
    out.frame_u64(n_);
    out.frame_u64(v_);
    out.frame_u64(stride_);
    out.frame_u64(codebook_->size());

    write_packed(out, codebook_->symbols(), codebook_->symbol_width());
    occupancy_.write(out);
    write_packed(out, ranks_, rank_width());
    write_packed(out, sel_, select_sample_width());

    out.frame_u64(blocks_.size());
    for (const Bsd& b : blocks_) {
        out.frame_u64(b.heads().size());
        write_packed(out, b.heads(), b.head_width());
        write_packed(out, b.pointers(), b.pointer_width());
        out.frame_u64(b.stream().length());
        out.payload_bits(b.stream().bits);
    }

    SerializedFid s;
    s.payload_bits = out.payload_bit_count();
    s.framing_bits = out.framing_bit_count();
    s.bytes = std::move(out).take();
    return s;
}

Fid Fid::deserialize(std::span<const std::uint8_t> bytes) {
    ByteReader in(bytes);
    const auto m = in.bytes(sizeof magic);
    if (!std::equal(m.begin(), m.end(), reinterpret_cast<const std::uint8_t*>(magic))) {
        throw format_error("not a CGF1 index (bad magic)");
    }
    const std::uint8_t version = in.u8();
    if (version != format_version) {
        throw format_error("unsupported index version " + std::to_string(version));
    }

    Fid f;
    f.u_ = in.u64();
    f.n_ = in.u64();
    f.v_ = in.u64();
    f.stride_ = in.u64();
    const std::uint64_t d = in.u64();
    if (f.u_ < 2 || f.n_ == 0 || f.n_ > f.u_) {
        throw format_error("index header has invalid u/n");
    }
    if (f.v_ != fid_block_width(f.n_, f.u_) || f.stride_ != fid_select_stride(f.u_)) {
        throw format_error("index header parameters do not match u and n");
    }
    if (d == 0 || d > f.n_) {
        throw format_error("index header has invalid codebook size");
    }

    const unsigned sym_width = in.u8();
    if (sym_width == 0 || sym_width > 64) {
        throw format_error("codebook width out of range");
    }
    auto symbols = unpack_fixed(in.bits(d * sym_width), sym_width, d);
    f.codebook_ = std::make_shared<const Codebook>(Codebook::from_symbols(std::move(symbols)));
    if (f.codebook_->symbol_width() != sym_width) {
        throw format_error("codebook width is not minimal");
    }

    f.occupancy_ = RsBitvector::read(in);
    const std::uint64_t nb = ceil_div(f.u_, f.v_);
    if (f.occupancy_.size() != nb) {
        throw format_error("occupancy bitvector has the wrong length");
    }
    f.ranks_ = read_packed(in, nb, f.rank_width(), "rank samples");
    f.sel_ = read_packed(in, ceil_div(f.n_, f.stride_), f.select_sample_width(), "select samples");
    if (f.ranks_[0] != 0) {
        throw format_error("first rank sample must be zero");
    }
    for (std::uint64_t b = 0; b < nb; ++b) {
        const std::uint64_t next = b + 1 < nb ? f.ranks_[b + 1] : f.n_;
        if (next < f.ranks_[b] || (next > f.ranks_[b]) != f.occupancy_[b]) {
            throw format_error("rank samples disagree with the occupancy bitvector");
        }
    }
    for (std::uint64_t s : f.sel_) {
        if (s >= nb || !f.occupancy_[s]) {
            throw format_error("select sample points at an empty block");
        }
    }

    const std::uint64_t count = in.u64();
    if (count != f.occupancy_.ones()) {
        throw format_error("block count disagrees with the occupancy bitvector");
    }
    f.blocks_.reserve(count);
    const unsigned head_width = width_for(f.v_ - 1);
    for (std::uint64_t j = 0; j < count; ++j) {
        const std::uint64_t b = f.occupancy_.select1(j);
        const std::uint64_t population = (b + 1 < nb ? f.ranks_[b + 1] : f.n_) - f.ranks_[b];
        const std::uint64_t runs = in.u64();
        if (runs != ceil_div(population, bsd_run_length(f.v_))) {
            throw format_error("block " + std::to_string(j) + " has the wrong number of runs");
        }
        auto heads = read_packed(in, runs, head_width, "heads");
        const unsigned ptr_width = in.u8();
        if (ptr_width == 0 || ptr_width > 64) {
            throw format_error("pointer width out of range");
        }
        auto ptrs = unpack_fixed(in.bits(runs * ptr_width), ptr_width, runs);
        EncodedStream stream;
        stream.bits = in.bits(in.u64());
        stream.count = population - runs;
        Bsd bsd = Bsd::from_parts(f.v_, population, std::move(heads), std::move(ptrs), std::move(stream),
                                  f.codebook_);
        if (bsd.pointer_width() != ptr_width) {
            throw format_error("pointer width is not minimal");
        }
        f.blocks_.push_back(std::move(bsd));
    }
    if (!in.at_end()) {
        throw format_error("trailing bytes after the last block");
    }
    return f;
}

void Fid::save(const std::filesystem::path& path) const {
    const auto bytes = serialize();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw format_error("cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw format_error("write to " + path.string() + " failed");
    }
}

Fid Fid::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw format_error("cannot open " + path.string());
    }
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

} // namespace cgap
