// cgap: measure sets, reproduce the simulation tables, build and query indexes.
#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cgap/error.hpp"
#include "cgap/fid.hpp"
#include "cgap/measure.hpp"
#include "cgap/set_io.hpp"
#include "cgap/simgen.hpp"

namespace {

using namespace cgap;

enum exit_code : int { ok = 0, usage = 1, io = 2, verify_failed = 3 };

// Thrown when an answer disagrees with the reference set.
struct mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int log_level() {
    const char* v = std::getenv("CGAP_LOG");
    if (!v) {
        return 0;
    }
    const std::string s(v);
    if (s == "debug") {
        return 2;
    }
    return s.empty() || s == "0" || s == "off" ? 0 : 1;
}

template <class... Args>
void log(int level, const char* fmt, Args... args) {
    if (log_level() >= level) {
        std::fprintf(stderr, "cgap: ");
        std::fprintf(stderr, fmt, args...);
        std::fputc('\n', stderr);
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SetFormat parse_format(const std::string& f) { return f == "bin" ? SetFormat::binary : SetFormat::text; }

// Writes to the file when a path is given, stdout otherwise.
template <class F>
void emit(const std::string& path, F&& body) {
    if (path.empty()) {
        body(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw format_error("cannot open " + path + " for writing");
    }
    body(out);
    if (!out) {
        throw format_error("write to " + path + " failed");
    }
}

unsigned long long ull(std::uint64_t v) { return static_cast<unsigned long long>(v); }

// ---- measure

std::string measure_csv(const MeasureReport& r) {
    const auto p = r.per_item();
    char buf[1024];
    std::snprintf(buf, sizeof buf,
                  "u,n,d,g_max,gap_bits,z_gamma_bits,z_delta_bits,binom_bound_bits,u_h0_bits,n_h0_g_bits,"
                  "c_length_bits,huffman_bits,huffman_book_bits,cb_bits,tail_flag_bits,tail_gap_bits,"
                  "gap,gap_zdelta,uh0,nh0g,nh0g_zdelta,nh0g_zdelta_cb,binom,huffman\n"
                  "%llu,%llu,%llu,%llu,%llu,%llu,%llu,%llu,%.5f,%.5f,%llu,%llu,%llu,%llu,%llu,%llu,"
                  "%.5f,%.5f,%.5f,%.5f,%.5f,%.5f,%.5f,%.5f\n",
                  ull(r.u), ull(r.n), ull(r.d), ull(r.g_max), ull(r.gap_bits), ull(r.z_gamma_bits),
                  ull(r.z_delta_bits), ull(r.binom_bound_bits), r.u_h0_bits, r.n_h0_g_bits, ull(r.c_length_bits),
                  ull(r.huffman_bits), ull(r.huffman_book_bits), ull(r.cb_bits), ull(r.tail_flag_bits),
                  ull(r.tail_gap_bits), p.gap, p.gap_zdelta, p.uh0, p.nh0g, p.nh0g_zdelta, p.nh0g_zdelta_cb, p.binom,
                  p.huffman);
    return buf;
}

// ---- build

void print_space(std::ostream& out, const Fid& f, const SerializedFid& ser) {
    const auto sp = f.space();
    const double n = static_cast<double>(f.size());
    char buf[256];
    out << "component,bits,bits_per_item\n";
    auto line = [&](const char* name, std::uint64_t bits) {
        std::snprintf(buf, sizeof buf, "%s,%llu,%.5f\n", name, ull(bits), static_cast<double>(bits) / n);
        out << buf;
    };
    line("streams", sp.streams);
    line("heads", sp.heads);
    line("pointers", sp.pointers);
    line("occupancy", sp.occupancy);
    line("ranks", sp.ranks);
    line("select_samples", sp.select_samples);
    line("codebook", sp.codebook);
    line("payload_total", sp.total());
    line("framing", ser.framing_bits);
    line("file", 8 * ser.bytes.size());
}

// ---- query / verify

std::uint64_t oracle_rank(const SortedSet& s, std::uint64_t x) {
    const auto el = s.elements();
    return static_cast<std::uint64_t>(std::upper_bound(el.begin(), el.end(), x) - el.begin());
}

void check_against(const Fid& f, const SortedSet& s) {
    if (f.universe() != s.universe() || f.size() != s.size()) {
        throw mismatch("index has u=" + std::to_string(f.universe()) + " n=" + std::to_string(f.size()) +
                       ", reference set has u=" + std::to_string(s.universe()) + " n=" + std::to_string(s.size()));
    }
}

// Every select, rank at each element and its neighbours, and random ranks.
std::uint64_t verify_all(const Fid& f, const SortedSet& s, std::uint64_t seed) {
    check_against(f, s);
    std::uint64_t checked = 0;
    auto rank_is = [&](std::uint64_t x) {
        const auto got = f.rank(x);
        const auto want = oracle_rank(s, x);
        ++checked;
        if (got != want) {
            throw mismatch("rank(" + std::to_string(x) + ") = " + std::to_string(got) + ", expected " +
                           std::to_string(want));
        }
    };
    for (std::uint64_t i = 0; i < s.size(); ++i) {
        const auto got = f.select(i);
        ++checked;
        if (got != s[i]) {
            throw mismatch("select(" + std::to_string(i) + ") = " + std::to_string(got) + ", expected " +
                           std::to_string(s[i]));
        }
        rank_is(s[i]);
        if (s[i] > 0) {
            rank_is(s[i] - 1);
        }
        if (s[i] + 1 < s.universe()) {
            rank_is(s[i] + 1);
        }
    }
    std::mt19937_64 rng(seed);
    for (int q = 0; q < 100000; ++q) {
        rank_is(rng() % s.universe());
    }
    return checked;
}

// ---- bench

struct Mix {
    std::uint64_t rank = 1;
    std::uint64_t select = 1;
};

Mix parse_mix(const std::string& text) {
    const auto colon = text.find(':');
    Mix m;
    try {
        if (colon == std::string::npos) {
            throw std::invalid_argument(text);
        }
        m.rank = std::stoull(text.substr(0, colon));
        m.select = std::stoull(text.substr(colon + 1));
    } catch (const std::logic_error&) {
        throw domain_error("--mix expects RANK:SELECT weights, got '" + text + "'");
    }
    if (m.rank + m.select == 0) {
        throw domain_error("--mix weights cannot both be zero");
    }
    return m;
}

void run_bench(std::ostream& out, const Fid& f, std::uint64_t queries, std::uint64_t seed, const Mix& mix) {
    const SortedSet base = f.to_set();
    const auto el = base.elements();
    std::mt19937_64 rng(seed);
    std::vector<std::pair<bool, std::uint64_t>> ops(queries);
    for (auto& op : ops) {
        const bool is_rank = rng() % (mix.rank + mix.select) < mix.rank;
        op = {is_rank, is_rank ? rng() % f.universe() : rng() % f.size()};
    }

    QueryStats rank_stats;
    QueryStats select_stats;
    std::uint64_t ranks = 0;
    std::uint64_t selects = 0;
    std::uint64_t max_decoded = 0;
    std::uint64_t max_probes = 0;
    std::uint64_t sink = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& [is_rank, arg] : ops) {
        QueryStats st;
        if (is_rank) {
            sink += f.rank(arg, &st);
            rank_stats.decoded += st.decoded;
            ++ranks;
        } else {
            sink += f.select(arg, &st);
            select_stats.decoded += st.decoded;
            select_stats.probes += st.probes;
            ++selects;
        }
        max_decoded = std::max(max_decoded, st.decoded);
        max_probes = std::max(max_probes, st.probes);
    }
    const double fid_s = seconds_since(t0);

    const auto t1 = std::chrono::steady_clock::now();
    for (const auto& [is_rank, arg] : ops) {
        sink += is_rank ? static_cast<std::uint64_t>(std::upper_bound(el.begin(), el.end(), arg) - el.begin())
                        : el[arg];
    }
    const double base_s = seconds_since(t1);
    log(2, "checksum %llu", ull(sink));

    auto mean = [](std::uint64_t total, std::uint64_t count) {
        return count ? static_cast<double>(total) / static_cast<double>(count) : 0.0;
    };
    const std::uint64_t lu = std::bit_width(f.universe() - 1);
    char buf[1024];
    std::snprintf(buf, sizeof buf,
                  "metric,value\n"
                  "u,%llu\nn,%llu\nqueries,%llu\nrank_queries,%llu\nselect_queries,%llu\n"
                  "fid_queries_per_second,%.1f\nbaseline_queries_per_second,%.1f\n"
                  "mean_decoded_per_rank,%.4f\nmean_decoded_per_select,%.4f\nmean_probes_per_select,%.4f\n"
                  "max_decoded,%llu\nmax_probes,%llu\ndecode_bound,%llu\n",
                  ull(f.universe()), ull(f.size()), ull(queries), ull(ranks), ull(selects),
                  static_cast<double>(queries) / std::max(fid_s, 1e-9),
                  static_cast<double>(queries) / std::max(base_s, 1e-9), mean(rank_stats.decoded, ranks),
                  mean(select_stats.decoded, selects), mean(select_stats.probes, selects), ull(max_decoded),
                  ull(max_probes), ull(lu));
    out << buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cgap: gap-encoded sets, entropy measures and rank/select indexes"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::string format = "text";
    std::string index;

    auto* measure = app.add_subcommand("measure", "Report every size measure of a set file as CSV");
    measure->add_option("--input", input, "Set file")->required();
    measure->add_option("--output", output, "CSV destination (stdout when absent)");
    measure->add_option("--format", format, "Set file format")->check(CLI::IsMember({"text", "bin"}));

    std::string dist = "uniform";
    unsigned k_min = 1;
    unsigned k_max = 15;
    std::uint64_t n = 100000;
    std::uint64_t seed = 1;
    auto* table = app.add_subcommand("table", "Simulate gap streams and write one CSV row per k");
    table->add_option("--dist", dist, "uniform or binomial")->check(CLI::IsMember({"uniform", "binomial"}));
    table->add_option("--k-min", k_min, "Smallest k");
    table->add_option("--k-max", k_max, "Largest k");
    table->add_option("--n", n, "Gaps per row");
    table->add_option("--seed", seed, "PRNG seed");
    table->add_option("--output", output, "CSV destination (stdout when absent)");

    auto* build = app.add_subcommand("build", "Build an index file from a set file");
    build->add_option("--input", input, "Set file")->required();
    build->add_option("--output", output, "Index file")->required();
    build->add_option("--format", format, "Set file format")->check(CLI::IsMember({"text", "bin"}));

    std::string op;
    std::uint64_t arg = 0;
    std::string oracle_path;
    auto* query = app.add_subcommand("query", "Answer one rank or select query");
    query->add_option("--index", index, "Index file")->required();
    query->add_option("op", op, "rank or select")->required()->check(CLI::IsMember({"rank", "select"}));
    query->add_option("--arg", arg, "Query argument")->required();
    query->add_option("--oracle", oracle_path, "Set file to check the answer against");
    query->add_option("--format", format, "Oracle set file format")->check(CLI::IsMember({"text", "bin"}));

    std::uint64_t queries = 100000;
    std::string mix_text = "1:1";
    auto* bench = app.add_subcommand("bench", "Time random queries and count decoding work");
    bench->add_option("--index", index, "Index file")->required();
    bench->add_option("--queries", queries, "Number of queries")->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed, "PRNG seed");
    bench->add_option("--mix", mix_text, "RANK:SELECT weights");
    bench->add_option("--output", output, "Report destination (stdout when absent)");

    auto* verify = app.add_subcommand("verify", "Check an index against its set file on every element");
    verify->add_option("--index", index, "Index file")->required();
    verify->add_option("--input", input, "Set file")->required();
    verify->add_option("--format", format, "Set file format")->check(CLI::IsMember({"text", "bin"}));
    verify->add_option("--seed", seed, "PRNG seed for the random rank probes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        const auto t0 = std::chrono::steady_clock::now();
        if (*measure) {
            const auto s = load_set(input, parse_format(format));
            log(1, "read %llu elements, u=%llu", ull(s.size()), ull(s.universe()));
            const auto csv = measure_csv(measure_report(s));
            emit(output, [&](std::ostream& out) { out << csv; });
        } else if (*table) {
            if (k_min < 1 || k_min > k_max || k_max > 30) {
                std::cerr << "cgap: need 1 <= --k-min <= --k-max <= 30\n";
                return usage;
            }
            if (n == 0) {
                std::cerr << "cgap: --n must be at least 1\n";
                return usage;
            }
            const auto rows = simulate_table(parse_distribution(dist), k_min, k_max, n, seed);
            emit(output, [&](std::ostream& out) { write_table_csv(out, rows); });
        } else if (*build) {
            const auto s = load_set(input, parse_format(format));
            const auto f = Fid::build(s);
            const auto ser = f.serialize_counted();
            std::ofstream out(output, std::ios::binary | std::ios::trunc);
            if (!out) {
                throw format_error("cannot open " + output + " for writing");
            }
            out.write(reinterpret_cast<const char*>(ser.bytes.data()), static_cast<std::streamsize>(ser.bytes.size()));
            if (!out) {
                throw format_error("write to " + output + " failed");
            }
            log(1, "built index: u=%llu n=%llu v=%llu blocks=%llu", ull(f.universe()), ull(f.size()),
                ull(f.block_width()), ull(f.block_count()));
            print_space(std::cout, f, ser);
        } else if (*query) {
            const auto f = Fid::load(index);
            std::uint64_t answer = 0;
            if (op == "rank") {
                if (arg >= f.universe()) {
                    throw range_error("rank argument " + std::to_string(arg) + " outside [0, " +
                                      std::to_string(f.universe() - 1) + "]");
                }
                answer = f.rank(arg);
            } else {
                if (arg >= f.size()) {
                    throw range_error("select index " + std::to_string(arg) + " outside [0, " +
                                      std::to_string(f.size() - 1) + "]");
                }
                answer = f.select(arg);
            }
            if (!oracle_path.empty()) {
                const auto s = load_set(oracle_path, parse_format(format));
                check_against(f, s);
                const std::uint64_t want = op == "rank" ? oracle_rank(s, arg) : s[arg];
                if (answer != want) {
                    throw mismatch(op + "(" + std::to_string(arg) + ") = " + std::to_string(answer) +
                                   ", reference answer " + std::to_string(want));
                }
            }
            std::cout << answer << '\n';
        } else if (*bench) {
            const auto f = Fid::load(index);
            const Mix mix = parse_mix(mix_text);
            emit(output, [&](std::ostream& out) { run_bench(out, f, queries, seed, mix); });
        } else if (*verify) {
            const auto f = Fid::load(index);
            const auto s = load_set(input, parse_format(format));
            const auto checked = verify_all(f, s, seed);
            std::cout << "ok: " << checked << " queries agree\n";
        }
        log(1, "done in %.3f s", seconds_since(t0));
    } catch (const mismatch& e) {
        std::cerr << "cgap: verification failed: " << e.what() << '\n';
        return verify_failed;
    } catch (const range_error& e) {
        std::cerr << "cgap: " << e.what() << '\n';
        return usage;
    } catch (const domain_error& e) {
        std::cerr << "cgap: " << e.what() << '\n';
        return usage;
    } catch (const cgap::error& e) {
        std::cerr << "cgap: " << e.what() << '\n';
        return io;
    } catch (const std::exception& e) {
        std::cerr << "cgap: " << e.what() << '\n';
        return io;
    }
    return ok;
}
