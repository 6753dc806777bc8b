// Command-line workbench: file-driven front end over the hindman headers.
// One subcommand per operation plus two end-to-end demo pipelines. All
// output is deterministic; exit code 0 on success, 1 on domain or data
// errors (and failed demos), 2 on usage errors.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <hindman/hindman.hpp>

namespace {

using hindman::nat;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_status = 0;

// Routes command output to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

nat parse_nat_token(std::string_view token, const char* what) {
    nat value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw UsageError(std::string(what) + ": expected a natural number, got '" +
                         std::string(token) + "'");
    return value;
}

std::pair<nat, nat> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("--range wants the form A..B");
    nat lo = parse_nat_token(std::string_view(text).substr(0, dots), "--range");
    nat hi = parse_nat_token(std::string_view(text).substr(dots + 2), "--range");
    if (lo == 0) throw UsageError("--range must start at 1 or above");
    if (hi < lo) throw UsageError("--range is empty");
    return {lo, hi};
}

// Scheme selection shared by color/search/verify. Structured schemes pull
// their backing object from the corresponding file flag.
struct SchemeInputs {
    std::string scheme = "parity";
    std::string enum_path;
    std::string approx_path;
};

void add_scheme_flags(CLI::App* cmd, SchemeInputs& in) {
    cmd->add_option("--scheme", in.scheme, "coloring scheme")
        ->check(CLI::IsMember({"delta2", "four", "three", "parity", "const"}));
    cmd->add_option("--enum", in.enum_path, "enumerated function file (four/three)");
    cmd->add_option("--approx", in.approx_path, "limit approximation file (delta2)");
}

hindman::Coloring make_coloring(const SchemeInputs& in) {
    if (in.scheme == "parity") return hindman::parity_coloring();
    if (in.scheme == "const") return hindman::constant_coloring();
    if (in.scheme == "delta2") {
        if (in.approx_path.empty()) throw UsageError("--scheme delta2 needs --approx");
        return hindman::delta2_coloring(hindman::load_limit_approximation(in.approx_path));
    }
    if (in.enum_path.empty()) throw UsageError("--scheme " + in.scheme + " needs --enum");
    auto f = hindman::load_enumerated_function(in.enum_path);
    return in.scheme == "three" ? hindman::three_coloring(std::move(f))
                                : hindman::four_coloring(std::move(f));
}

// Three-colorings print letters, everything else prints the number.
std::string color_token(const hindman::Coloring& c, int color) {
    if (c.color_count == 3) return std::string(1, hindman::color_letter(color));
    return std::to_string(color);
}

nat sum_of(const std::vector<nat>& xs) {
    nat total = 0;
    for (nat x : xs) total = hindman::checked_add(total, x);
    return total;
}

std::string join(const std::vector<nat>& xs) {
    std::ostringstream out;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j > 0) out << ",";
        out << xs[j];
    }
    return out.str();
}

struct DecomposeOpts {
    nat base = 3;
    std::vector<nat> values;
    std::string out;
};

void run_decompose(const DecomposeOpts& o) {
    Sink sink(o.out);
    for (nat n : o.values) {
        hindman::Decomposition d = hindman::decompose(n, o.base);
        sink.out() << "n=" << n << " base=" << o.base << "\n";
        sink.out() << "terms:";
        for (const hindman::Term& t : d.terms)
            sink.out() << " " << t.digit << "*" << o.base << "^" << t.position;
        sink.out() << "\n";
        sink.out() << "lambda=" << d.lowest_position() << " mu=" << d.highest_position()
                   << " first_digit=" << d.first_digit() << "\n";
        sink.out() << "gaps:";
        for (const hindman::Gap& g : d.gaps) sink.out() << " (" << g.lo << "," << g.hi << ")";
        sink.out() << "\n";
        hindman::ResidueClass rc = hindman::residue_class(n, o.base);
        sink.out() << "class: O(" << rc.level << "," << rc.digit << ")\n";
    }
}

struct ColorOpts {
    SchemeInputs scheme;
    std::string range;
    std::string out;
};

void run_color(const ColorOpts& o) {
    auto [lo, hi] = parse_range(o.range);
    hindman::Coloring c = make_coloring(o.scheme);
    Sink sink(o.out);
    sink.out() << "# scheme=" << c.descriptor << "\n";
    for (nat n = lo; n <= hi; ++n)
        sink.out() << n << "," << color_token(c, hindman::eval_color(c, n)) << "\n";
}

struct SearchOpts {
    SchemeInputs scheme;
    nat horizon = 0;
    nat sum_bound = 2;
    nat size = 0;
    unsigned jobs = 1;
    std::string out;
};

void run_search(const SearchOpts& o) {
    hindman::Coloring c = make_coloring(o.scheme);
    auto found = hindman::search_monochromatic(c, o.horizon, o.sum_bound, o.size, o.jobs);
    Sink sink(o.out);
    if (!found) {
        sink.out() << "# no monochromatic set of size " << o.size << " within [1," << o.horizon
                   << "]\n";
        exit_status = 1;
        return;
    }
    hindman::write_integer_set(sink.out(), found->elements);
}

struct VerifyOpts {
    SchemeInputs scheme;
    std::string set_path;
    nat sum_bound = 2;
    std::string out;
};

void run_verify(const VerifyOpts& o) {
    hindman::Coloring c = make_coloring(o.scheme);
    std::vector<nat> xs = hindman::load_integer_set(o.set_path);
    hindman::MonoCertificate cert = hindman::is_monochromatic(c, xs, o.sum_bound);
    Sink sink(o.out);
    if (cert.verdict) {
        sink.out() << "monochromatic color=" << color_token(c, cert.color) << "\n";
        return;
    }
    nat first_sum = sum_of(cert.offending_first);
    nat second_sum = sum_of(cert.offending_second);
    sink.out() << "not monochromatic\n";
    sink.out() << "first: {" << join(cert.offending_first) << "} sum=" << first_sum
               << " color=" << color_token(c, hindman::eval_color(c, first_sum)) << "\n";
    sink.out() << "second: {" << join(cert.offending_second) << "} sum=" << second_sum
               << " color=" << color_token(c, hindman::eval_color(c, second_sum)) << "\n";
    exit_status = 1;
}

struct ThinOpts {
    std::string mode = "chain";
    nat base = 3;
    std::string set_path;
    std::string out;
};

void run_thin(const ThinOpts& o) {
    std::vector<nat> xs = hindman::load_integer_set(o.set_path);
    std::vector<nat> kept = o.mode == "chain" ? hindman::thin_chain(xs, o.base)
                                              : hindman::thin_first_digit(xs, o.base);
    Sink sink(o.out);
    hindman::write_integer_set(sink.out(), kept);
}

struct SynthOpts {
    SchemeInputs scheme;
    nat size = 0;
    nat sum_bound = 3;
    int limit_bit = -1;
    std::string out;
};

void run_synth(const SynthOpts& o) {
    hindman::SolutionCandidate candidate;
    if (o.scheme.scheme == "delta2") {
        if (o.scheme.approx_path.empty()) throw UsageError("--scheme delta2 needs --approx");
        auto a = hindman::load_limit_approximation(o.scheme.approx_path);
        candidate = o.limit_bit < 0 ? hindman::synthesize_delta2_solution(a, o.size)
                                    : hindman::synthesize_delta2_solution(a, o.size, o.limit_bit);
    } else if (o.scheme.scheme == "four" || o.scheme.scheme == "three") {
        if (o.scheme.enum_path.empty())
            throw UsageError("--scheme " + o.scheme.scheme + " needs --enum");
        auto f = hindman::load_enumerated_function(o.scheme.enum_path);
        nat base = o.scheme.scheme == "three" ? 7 : 3;
        candidate = hindman::synthesize_power_solution(f, base, o.size, o.sum_bound);
    } else {
        throw UsageError("synth needs a structured scheme (delta2, four, or three)");
    }
    Sink sink(o.out);
    hindman::write_integer_set(sink.out(), candidate.elements);
}

struct DecodeRangeOpts {
    std::string enum_path;
    std::string set_path;
    nat base = 3;
    std::string out;
};

void run_decode_range(const DecodeRangeOpts& o) {
    hindman::EnumeratedFunction f = hindman::load_enumerated_function(o.enum_path);
    std::vector<nat> xs = hindman::load_integer_set(o.set_path);
    bool fresh = hindman::chain_is_fresh(f, xs, o.base);
    hindman::SolutionCandidate candidate{xs, 2};
    auto table = hindman::decode_range_table(
        candidate, f, o.base,
        fresh ? hindman::Freshness::verified : hindman::Freshness::unverified);
    Sink sink(o.out);
    sink.out() << "# enum=" << o.enum_path << " set=" << o.set_path << " base=" << o.base
               << " certified=" << (fresh ? 1 : 0) << "\n";
    for (const hindman::MembershipVerdict& v : table)
        sink.out() << v.query << "," << (v.member ? 1 : 0) << "," << v.evidence.element << ","
                   << v.evidence.successor << "," << v.evidence.bound << "\n";
}

struct DecodeDelta2Opts {
    std::string approx_path;
    std::string set_path;
    nat horizon = ~nat{0};
    std::string out;
};

void run_decode_delta2(const DecodeDelta2Opts& o) {
    hindman::LimitApproximation a = hindman::load_limit_approximation(o.approx_path);
    std::vector<nat> xs = hindman::load_integer_set(o.set_path);
    nat horizon = o.horizon == ~nat{0} ? a.horizon() : o.horizon;
    hindman::Coloring c = hindman::delta2_coloring(a);
    hindman::BSets sets = hindman::decode_delta2(xs, c, horizon);
    Sink sink(o.out);
    sink.out() << "# approx=" << o.approx_path << " set=" << o.set_path << " horizon=" << horizon
               << "\n";
    std::map<nat, std::vector<int>> rows;
    for (nat k : sets.b0) rows[k].push_back(0);
    for (nat k : sets.b1) rows[k].push_back(1);
    for (const auto& [k, bits] : rows)
        for (int bit : bits) {
            nat witness = bit == 0 ? sets.witness0.at(k) : sets.witness1.at(k);
            sink.out() << "k=" << k << " bit=" << bit << " witness=" << witness << "\n";
        }
}

struct RangeOracleOpts {
    std::string enum_path;
    std::string range;
    std::string out;
};

void run_range_oracle(const RangeOracleOpts& o) {
    auto [lo, hi] = parse_range(o.range);
    hindman::EnumeratedFunction f = hindman::load_enumerated_function(o.enum_path);
    Sink sink(o.out);
    sink.out() << "# privileged: structural range membership, harness use only\n";
    sink.out() << "# enum=" << o.enum_path << "\n";
    for (nat y = lo; y <= hi; ++y)
        sink.out() << y << "," << (hindman::range_oracle(f, y) ? 1 : 0) << "\n";
}

struct DemoDelta2Opts {
    std::string approx_path;
    nat size = 4;
    std::string out;
};

void run_demo_delta2(const DemoDelta2Opts& o) {
    hindman::LimitApproximation a = hindman::load_limit_approximation(o.approx_path);
    Sink sink(o.out);
    auto& out = sink.out();
    bool pass = true;
    auto check = [&](bool ok) {
        if (!ok) pass = false;
        return ok ? "ok" : "FAIL";
    };

    out << "== delta2 pipeline ==\n";
    out << "approximation: " << a.describe() << "\n";
    out << "limit bits:";
    for (nat k = 0; k <= a.horizon(); ++k) out << " A(" << k << ")=" << a.limit_value(k);
    out << "\n";

    out << "step 1: pick one number per lowest-digit-1 class, past every mind change\n";
    hindman::SolutionCandidate w = hindman::synthesize_delta2_solution(a, o.size);
    out << "  W = {" << join(w.elements) << "}  (floor " << a.max_stabilization_stage() << ")\n";

    out << "step 2: claim: pairwise bounded sums of W land in one color class\n";
    hindman::Coloring c = hindman::delta2_coloring(a);
    hindman::MonoCertificate cert = hindman::is_monochromatic(c, w.elements, 2);
    out << "  monochromatic: " << check(cert.verdict);
    if (cert.verdict) out << " color=" << cert.color;
    out << "\n";

    out << "step 3: claim: colors of W pin down limit bits without the schedules\n";
    hindman::BSets sets = hindman::decode_delta2(w.elements, c, a.horizon());
    bool b1_sound = true;
    for (nat k : sets.b1) b1_sound = b1_sound && a.limit_value(k) == 1;
    bool b0_sound = true;
    for (nat k : sets.b0) b0_sound = b0_sound && a.limit_value(k) == 0;
    auto level_list = [](const std::set<nat>& ks) {
        std::ostringstream text;
        bool first = true;
        for (nat k : ks) {
            text << (first ? "" : ",") << k;
            first = false;
        }
        return text.str();
    };
    out << "  decoded-1 levels {" << level_list(sets.b1)
        << "} all have limit 1: " << check(b1_sound) << "\n";
    out << "  decoded-0 levels {" << level_list(sets.b0)
        << "} all have limit 0: " << check(b0_sound) << "\n";
    std::vector<nat> both;
    std::set_intersection(sets.b0.begin(), sets.b0.end(), sets.b1.begin(), sets.b1.end(),
                          std::back_inserter(both));
    out << "  no level decoded both ways: " << check(both.empty()) << "\n";
    bool covered = true;
    for (nat n : w.elements) {
        hindman::ResidueClass rc = hindman::residue_class(n, 3);
        if (rc.level > a.horizon() || (rc.digit != 1 && rc.digit != 2)) continue;
        if (!sets.b0.count(rc.level) && !sets.b1.count(rc.level)) covered = false;
    }
    out << "  every level W meets is decided: " << check(covered) << "\n";

    out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass) exit_status = 1;
}

struct DemoRangeOpts {
    std::string enum_path;
    nat base = 7;
    nat size = 6;
    nat sum_bound = 3;
    std::string out;
};

void run_demo_range(const DemoRangeOpts& o) {
    if (o.base != 3 && o.base != 7) throw UsageError("--base must be 3 or 7");
    hindman::EnumeratedFunction f = hindman::load_enumerated_function(o.enum_path);
    Sink sink(o.out);
    auto& out = sink.out();
    bool pass = true;
    auto check = [&](bool ok) {
        if (!ok) pass = false;
        return ok ? "ok" : "FAIL";
    };

    out << "== range pipeline (base " << o.base << ") ==\n";
    out << "function: " << f.describe() << "\n";

    out << "step 1: synthesize a power chain that outruns its own witnesses\n";
    hindman::SolutionCandidate x = hindman::synthesize_power_solution(f, o.base, o.size, o.sum_bound);
    out << "  X = {" << join(x.elements) << "}\n";
    out << "  chain condition: " << check(hindman::satisfies_chain_condition(x.elements, o.base))
        << "\n";
    out << "  fresh cut points: " << check(hindman::chain_is_fresh(f, x.elements, o.base)) << "\n";

    out << "step 2: claim: sums of at most " << o.sum_bound << " elements share one color\n";
    hindman::Coloring c = o.base == 7 ? hindman::three_coloring(f) : hindman::four_coloring(f);
    hindman::MonoCertificate cert = hindman::is_monochromatic(c, x.elements, o.sum_bound);
    out << "  monochromatic: " << check(cert.verdict);
    if (cert.verdict) out << " color=" << color_token(c, cert.color);
    out << "\n";

    out << "step 3: claim: bounded queries along the chain decide the whole range\n";
    nat top = hindman::decodable_bound(x.elements, o.base);
    out << "  decodable range: [1," << top << "]\n";
    hindman::QueryRecorder<hindman::EnumeratedFunction> recorder{f};
    bool verdicts_ok = true;
    bool discipline_ok = true;
    for (nat y = 1; y <= top; ++y) {
        recorder.reset();
        hindman::MembershipVerdict v = hindman::decode_range_membership(
            x, recorder, y, o.base, hindman::Freshness::verified);
        bool truth = hindman::range_oracle(f, y);
        if (v.member != truth) verdicts_ok = false;
        if (recorder.max_argument > v.evidence.bound) discipline_ok = false;
        out << "  y=" << y << " member=" << (v.member ? 1 : 0) << " bound=" << v.evidence.bound
            << " queries=" << recorder.calls << "\n";
    }
    out << "  verdicts match the structural range: " << check(verdicts_ok) << "\n";
    out << "  no query ever exceeded its bound: " << check(discipline_ok) << "\n";

    out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass) exit_status = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for bounded-sum monochromatic set combinatorics"};
    app.require_subcommand(1);

    auto decompose = std::make_shared<DecomposeOpts>();
    auto* decompose_cmd = app.add_subcommand("decompose", "digit decomposition, gaps, class");
    decompose_cmd->add_option("--base", decompose->base, "positional base (3 or 7)");
    decompose_cmd->add_option("values", decompose->values, "numbers to decompose")->required();
    decompose_cmd->add_option("--out", decompose->out, "write to file instead of stdout");
    decompose_cmd->callback([decompose] { run_decompose(*decompose); });

    auto color = std::make_shared<ColorOpts>();
    auto* color_cmd = app.add_subcommand("color", "dump a coloring over a range as CSV");
    add_scheme_flags(color_cmd, color->scheme);
    color_cmd->add_option("--range", color->range, "interval A..B")->required();
    color_cmd->add_option("--out", color->out, "write to file instead of stdout");
    color_cmd->callback([color] { run_color(*color); });

    auto search = std::make_shared<SearchOpts>();
    auto* search_cmd = app.add_subcommand("search", "least monochromatic set by backtracking");
    add_scheme_flags(search_cmd, search->scheme);
    search_cmd->add_option("--N", search->horizon, "search inside [1,N]")->required();
    search_cmd->add_option("--sum-len", search->sum_bound, "sum length bound");
    search_cmd->add_option("--size", search->size, "target set size")->required();
    search_cmd->add_option("--jobs", search->jobs, "worker threads");
    search_cmd->add_option("--out", search->out, "write to file instead of stdout");
    search_cmd->callback([search] { run_search(*search); });

    auto verify = std::make_shared<VerifyOpts>();
    auto* verify_cmd = app.add_subcommand("verify", "check a set file for monochromatic sums");
    add_scheme_flags(verify_cmd, verify->scheme);
    verify_cmd->add_option("--set", verify->set_path, "integer set file")->required();
    verify_cmd->add_option("--sum-len", verify->sum_bound, "sum length bound");
    verify_cmd->add_option("--out", verify->out, "write to file instead of stdout");
    verify_cmd->callback([verify] { run_verify(*verify); });

    auto thin = std::make_shared<ThinOpts>();
    auto* thin_cmd = app.add_subcommand("thin", "thin a set to a chain or a first-digit class");
    thin_cmd->add_option("--mode", thin->mode, "chain or digit")
        ->check(CLI::IsMember({"chain", "digit"}));
    thin_cmd->add_option("--base", thin->base, "digit base");
    thin_cmd->add_option("--set", thin->set_path, "integer set file")->required();
    thin_cmd->add_option("--out", thin->out, "write to file instead of stdout");
    thin_cmd->callback([thin] { run_thin(*thin); });

    auto synth = std::make_shared<SynthOpts>();
    auto* synth_cmd = app.add_subcommand("synth", "build a solution from structure (privileged)");
    add_scheme_flags(synth_cmd, synth->scheme);
    synth_cmd->add_option("--size", synth->size, "number of elements")->required();
    synth_cmd->add_option("--sum-len", synth->sum_bound, "sum length bound (four/three)");
    synth_cmd->add_option("--limit-bit", synth->limit_bit, "force the delta2 limit bit (0 or 1)");
    synth_cmd->add_option("--out", synth->out, "write to file instead of stdout");
    synth_cmd->callback([synth] { run_synth(*synth); });

    auto decode_range = std::make_shared<DecodeRangeOpts>();
    auto* decode_range_cmd =
        app.add_subcommand("decode-range", "range membership from a chain, bounded queries only");
    decode_range_cmd->add_option("--enum", decode_range->enum_path, "enumerated function file")
        ->required();
    decode_range_cmd->add_option("--set", decode_range->set_path, "chain set file")->required();
    decode_range_cmd->add_option("--base", decode_range->base, "digit base");
    decode_range_cmd->add_option("--out", decode_range->out, "write to file instead of stdout");
    decode_range_cmd->callback([decode_range] { run_decode_range(*decode_range); });

    auto decode_delta2 = std::make_shared<DecodeDelta2Opts>();
    auto* decode_delta2_cmd =
        app.add_subcommand("decode-delta2", "limit bits from a colored set, no schedule access");
    decode_delta2_cmd->add_option("--approx", decode_delta2->approx_path, "approximation file")
        ->required();
    decode_delta2_cmd->add_option("--set", decode_delta2->set_path, "integer set file")->required();
    decode_delta2_cmd->add_option("--N", decode_delta2->horizon, "index horizon (default: file's)");
    decode_delta2_cmd->add_option("--out", decode_delta2->out, "write to file instead of stdout");
    decode_delta2_cmd->callback([decode_delta2] { run_decode_delta2(*decode_delta2); });

    auto range_oracle = std::make_shared<RangeOracleOpts>();
    auto* range_oracle_cmd =
        app.add_subcommand("range-oracle", "privileged structural range dump (harness only)");
    range_oracle_cmd->add_option("--enum", range_oracle->enum_path, "enumerated function file")
        ->required();
    range_oracle_cmd->add_option("--range", range_oracle->range, "interval A..B")->required();
    range_oracle_cmd->add_option("--out", range_oracle->out, "write to file instead of stdout");
    range_oracle_cmd->callback([range_oracle] { run_range_oracle(*range_oracle); });

    auto demo_delta2 = std::make_shared<DemoDelta2Opts>();
    auto* demo_delta2_cmd =
        app.add_subcommand("demo-delta2", "end-to-end limit-bit pipeline with checks");
    demo_delta2_cmd->add_option("--approx", demo_delta2->approx_path, "approximation file")
        ->required();
    demo_delta2_cmd->add_option("--size", demo_delta2->size, "solution size");
    demo_delta2_cmd->add_option("--out", demo_delta2->out, "write to file instead of stdout");
    demo_delta2_cmd->callback([demo_delta2] { run_demo_delta2(*demo_delta2); });

    auto demo_range = std::make_shared<DemoRangeOpts>();
    auto* demo_range_cmd =
        app.add_subcommand("demo-range", "end-to-end range-decoding pipeline with checks");
    demo_range_cmd->add_option("--enum", demo_range->enum_path, "enumerated function file")
        ->required();
    demo_range_cmd->add_option("--base", demo_range->base, "digit base (3 or 7)");
    demo_range_cmd->add_option("--size", demo_range->size, "chain length");
    demo_range_cmd->add_option("--sum-len", demo_range->sum_bound, "sum length bound");
    demo_range_cmd->add_option("--out", demo_range->out, "write to file instead of stdout");
    demo_range_cmd->callback([demo_range] { run_demo_range(*demo_range); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_status;
}
