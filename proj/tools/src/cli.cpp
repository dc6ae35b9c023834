/* Copyright (C) 2026 The nfiso Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include "nfiso/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nfiso/driver.hpp"
#include "nfiso/parse.hpp"

namespace nfiso::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string f_src, g_src;
    bool json = false;
    bool baseline = false;
    bool pre_only = false;
    bool verbose = false;
    bool parallel = false;
    std::string start_prime = "3";
    double max_seconds = 0;
};

class InputError : public Error {
  public:
    using Error::Error;
};

// An argument is read as a file when one exists at that path; otherwise it
// is parsed as a polynomial.
IntPoly load(const std::string& src, const char* name) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(src, ec)) {
        std::ifstream in(src);
        if (!in) throw InputError(std::string(name) + ": cannot read " + src);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            return parse_poly(buf.str());
        } catch (const ParseError& e) {
            throw InputError(std::string(name) + " (" + src + "): " + e.what());
        }
    }
    try {
        IntPoly p = parse_poly(src);
        if (p.degree() < 1) throw InputError(std::string(name) + ": polynomial must have positive degree");
        return p;
    } catch (const ParseError& e) {
        const bool pathlike = src.ends_with(".txt") || src.ends_with(".poly") || src.starts_with("/") ||
                              src.starts_with("./") || src.starts_with("../");
        if (pathlike) throw InputError(std::string(name) + ": file not found: " + src);
        throw InputError(std::string(name) + ": " + e.what());
    }
}

json primes_json(const std::vector<Integer>& primes) {
    json out = json::array();
    for (const auto& p : primes) {
        if (p.fits_ulong_p()) out.push_back(p.get_ui());
        else out.push_back(p.get_str());
    }
    return out;
}

const char* status_name(Verdict v) {
    switch (v) {
        case Verdict::NoIsomorphism: return "no_isomorphism";
        case Verdict::Isomorphisms: return "isomorphic";
        case Verdict::Undecided: return "undecided";
    }
    return "undecided";
}

json to_json(const IsoResult& r) {
    json out;
    out["status"] = status_name(r.verdict);
    if (r.verdict == Verdict::Undecided) out["isomorphic"] = nullptr;
    else out["isomorphic"] = r.isomorphic();
    out["count"] = r.isomorphisms.size();
    json isos = json::array();
    for (const auto& c : r.isomorphisms) {
        json coeffs = json::array();
        for (int i = 0; i < static_cast<int>(c.h.numerator().coeffs().size()); ++i)
            coeffs.push_back(c.h.numerator()[i].get_str());
        isos.push_back({{"coeffs_num", coeffs}, {"denom", c.h.denominator().get_str()}});
    }
    out["isomorphisms"] = isos;
    out["preprocessing_dim"] = r.preprocessing_dim;
    out["primes_used"] = primes_json(r.primes_used);
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

void print_human(const IsoResult& r, const Options& opt, std::ostream& out) {
    for (const auto& n : r.notes) out << "note: " << n << '\n';
    switch (r.verdict) {
        case Verdict::NoIsomorphism: out << "no isomorphism\n"; break;
        case Verdict::Undecided:
            out << "undecided after pre-processing; lattice dimension " << r.preprocessing_dim << '\n';
            break;
        case Verdict::Isomorphisms:
            out << r.isomorphisms.size() << (r.isomorphisms.size() == 1 ? " isomorphism" : " isomorphisms") << '\n';
            for (const auto& c : r.isomorphisms) {
                out << "  h(x) = " << to_string(c.h.numerator());
                if (c.h.denominator() != 1) out << "  / " << c.h.denominator().get_str();
                out << '\n';
            }
            break;
    }
    if (opt.verbose) {
        out << "pre-processing dimension: " << r.preprocessing_dim << '\n';
        out << "primes used:";
        for (const auto& p : r.primes_used) out << ' ' << p.get_str();
        out << '\n';
        if (r.root_prime) out << "root prime: " << r.root_prime->get_str() << '\n';
        out << "LLL swaps: pre-processing " << r.preprocessing_lll.swaps << ", per root " << r.per_root_lll.swaps
            << '\n';
    }
}

int run_iso(const Options& opt, std::ostream& out, std::ostream& err) {
    IntPoly f, g;
    IsoConfig cfg;
    try {
        f = load(opt.f_src, "f");
        g = load(opt.g_src, "g");
        cfg.start_prime = Integer(opt.start_prime);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument&) {
        err << "error: --start-prime must be an integer\n";
        return kUsage;
    }
    if (opt.verbose) cfg.log = [&err](const std::string& m) { err << m << '\n'; };
    if (opt.max_seconds > 0)
        cfg.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(opt.max_seconds));
    cfg.parallel_roots = opt.parallel;

    IsoResult r;
    try {
        if (opt.pre_only) r = pre_processing(f, g, cfg);
        else if (opt.baseline) r = method2_baseline(f, g, cfg);
        else r = find_isomorphism(f, g, cfg);
    } catch (const Timeout& e) {
        err << "error: " << e.what() << '\n';
        return kFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (opt.json) out << to_json(r).dump(2) << '\n';
    else print_human(r, opt, out);
    return kDecided;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Field isomorphisms between number fields Q[x]/(g) -> Q[x]/(f)", "nfiso"};
    app.require_subcommand(1);
    Options opt;
    auto* iso = app.add_subcommand("iso", "Find all isomorphisms Q[x]/(g) -> Q[x]/(f)");
    iso->add_option("f", opt.f_src, "Polynomial f: file or inline text")->required();
    iso->add_option("g", opt.g_src, "Polynomial g: file or inline text")->required();
    iso->add_flag("--json", opt.json, "Print the result as JSON");
    iso->add_flag("--baseline", opt.baseline, "Skip pre-processing (per-root LLL only)");
    iso->add_flag("--pre-only", opt.pre_only, "Stop after pre-processing and report the lattice dimension");
    iso->add_option("--start-prime", opt.start_prime, "Prime search starts after this value");
    iso->add_flag("-v,--verbose", opt.verbose, "Progress on stderr and statistics");
    iso->add_flag("--parallel", opt.parallel, "Process the p-adic roots concurrently");
    iso->add_option("--max-seconds", opt.max_seconds, "Give up after this many seconds")
        ->check(CLI::NonNegativeNumber);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kDecided : kUsage;
    }
    if (opt.baseline && opt.pre_only) {
        err << "error: --baseline and --pre-only cannot be combined\n";
        return kUsage;
    }
    return run_iso(opt, out, err);
}

}  // namespace nfiso::cli
