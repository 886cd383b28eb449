#ifndef STIELTJES_CLI_HPP
#define STIELTJES_CLI_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "stieltjes/bench.hpp"
#include "stieltjes/expansion.hpp"
#include "stieltjes/forward.hpp"
#include "stieltjes/generators.hpp"
#include "stieltjes/json_io.hpp"
#include "stieltjes/moments.hpp"

namespace stieltjes::cli {

enum class Command { expand, reconstruct, forward, roundtrip, hankel, bench_conditioning, gen };

struct JobSpec {
    Command command;
    std::string input_path;
    std::string output_path;           // empty: write to stdout
    std::optional<int> order;
    std::optional<std::uint64_t> seed;
    std::optional<int> count;
    std::string family;                // bench: hilbert|random; gen: measure|string
};

// Generated instances follow the acceptance corpus shape.
constexpr int kDefaultMaxPoints = 6;
constexpr long kDefaultBound = 20;

namespace detail {

inline io::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open input file \"" + path + "\"");
    io::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("invalid JSON in \"" + path + "\": " + e.what());
    }
    return j;
}

inline void write_output(const io::json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw parse_error("cannot open output file \"" + path + "\"");
    f << j.dump(2) << '\n';
}

// doubles may be non-finite in conditioning reports; keep JSON well-formed
inline io::json finite_or_string(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

// Raise the moment order until rank exhaustion is witnessed; D = point count
// bounds the search for any valid measure.
inline MomentSequence moments_to_termination(const DiscreteMeasure& mu) {
    validate_measure(mu);
    const int cap = static_cast<int>(mu.points.size()) + 2;
    int order = 0;
    MomentSequence ms = moments_from_measure(mu, order);
    while (!is_zero(hankel_determinant(ms, 0, order + 1))) {
        if (++order > cap)
            throw domain_error("moments", "rank exhaustion not witnessed by order " +
                                              std::to_string(order - 1));
        ms = moments_from_measure(mu, order);
    }
    return ms;
}

inline MomentSequence moments_from_any(const io::json& j, const std::optional<int>& order) {
    if (j.contains("points")) {
        const DiscreteMeasure mu = io::measure_from_json(j);
        return order ? moments_from_measure(mu, *order) : moments_to_termination(mu);
    }
    return io::moments_from_json(j);
}

inline io::json bench_to_json(const BenchReport& report) {
    io::json rows = io::json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"k", row.k},
                        {"exact", to_string(row.exact)},
                        {"exact_decimal", row.exact_decimal},
                        {"float", finite_or_string(row.approx)},
                        {"rel_error", finite_or_string(row.rel_error)}});
    return {{"family", report.family},
            {"order", report.order},
            {"seed", report.seed},
            {"rows", rows},
            {"exact_seconds", report.exact_seconds},
            {"float_seconds", report.float_seconds}};
}

inline int run_roundtrip(const JobSpec& job, std::ostream& out) {
    if (!job.input_path.empty()) {
        const io::json j = load_json(job.input_path);
        const RoundtripReport report = j.contains("points")
                                           ? roundtrip_measure(io::measure_from_json(j))
                                           : roundtrip_string(io::string_from_json(j));
        write_output(io::report_to_json(report), job.output_path, out);
        return report.pass ? 0 : 1;
    }

    const std::uint64_t seed = job.seed.value_or(0);
    const int count = job.count.value_or(1);
    if (count < 1) throw parse_error("--count must be at least 1");
    bool all_pass = true;
    io::json reports = io::json::array();
    for (int i = 0; i < count; ++i) {
        const std::uint64_t instance_seed = seed + static_cast<std::uint64_t>(i);
        const DiscreteMeasure mu =
            gen_random_measure(instance_seed, kDefaultMaxPoints, kDefaultBound);
        RoundtripReport mr = roundtrip_measure(mu);
        all_pass = all_pass && mr.pass;
        io::json entry = io::report_to_json(mr);
        entry["index"] = i;
        entry["kind"] = "measure";
        reports.push_back(std::move(entry));

        const StringData sd = gen_random_string(instance_seed, kDefaultMaxPoints, kDefaultBound);
        RoundtripReport sr = roundtrip_string(sd);
        all_pass = all_pass && sr.pass;
        entry = io::report_to_json(sr);
        entry["index"] = i;
        entry["kind"] = "string";
        reports.push_back(std::move(entry));
    }
    write_output({{"seed", seed}, {"count", count}, {"pass", all_pass}, {"reports", reports}},
                 job.output_path, out);
    return all_pass ? 0 : 1;
}

inline int run_gen(const JobSpec& job, std::ostream& out) {
    const std::uint64_t seed = job.seed.value_or(0);
    const int count = job.count.value_or(1);
    const int size = job.order.value_or(kDefaultMaxPoints);
    if (count < 1) throw parse_error("--count must be at least 1");
    const std::string kind = job.family.empty() ? "measure" : job.family;

    io::json items = io::json::array();
    for (int i = 0; i < count; ++i) {
        const std::uint64_t instance_seed = seed + static_cast<std::uint64_t>(i);
        if (kind == "measure")
            items.push_back(io::measure_to_json(gen_random_measure(instance_seed, size, kDefaultBound)));
        else if (kind == "string")
            items.push_back(io::string_to_json(gen_random_string(instance_seed, size, kDefaultBound)));
        else
            throw parse_error("--family must be \"measure\" or \"string\" for gen");
    }
    write_output(count == 1 ? items.front() : items, job.output_path, out);
    return 0;
}

}  // namespace detail

// Executes one job; returns the process exit code.  0 = success,
// 1 = domain error (or a failing round trip), 2 = I/O or schema error.
inline int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
    try {
        switch (job.command) {
            case Command::expand: {
                const io::json j = detail::load_json(job.input_path);
                const DiscreteMeasure mu = io::measure_from_json(j);
                const MomentSequence ms = job.order ? moments_from_measure(mu, *job.order)
                                                    : detail::moments_to_termination(mu);
                detail::write_output(io::contfrac_to_json(contfrac_from_moments(ms)),
                                     job.output_path, out);
                return 0;
            }
            case Command::reconstruct: {
                const MomentSequence ms = io::moments_from_json(detail::load_json(job.input_path));
                detail::write_output(io::string_to_json(string_from_moments(ms)), job.output_path,
                                     out);
                return 0;
            }
            case Command::forward: {
                const StringData sd = io::string_from_json(detail::load_json(job.input_path));
                detail::write_output(io::ratfun_to_json(weyl_from_string(sd)), job.output_path,
                                     out);
                return 0;
            }
            case Command::hankel: {
                const MomentSequence ms =
                    detail::moments_from_any(detail::load_json(job.input_path), job.order);
                detail::write_output(io::table_to_json(hankel_table(ms)), job.output_path, out);
                return 0;
            }
            case Command::roundtrip:
                return detail::run_roundtrip(job, out);
            case Command::bench_conditioning: {
                const BenchReport report = bench_conditioning(
                    job.order.value_or(12), job.family.empty() ? "hilbert" : job.family,
                    job.seed.value_or(0));
                detail::write_output(detail::bench_to_json(report), job.output_path, out);
                return 0;
            }
            case Command::gen:
                return detail::run_gen(job, out);
        }
        err << "error: unknown command\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error " << e.what() << '\n';
        return 1;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace stieltjes::cli

#endif
