#include "qcomb/cli.hpp"

#include <charconv>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>

#include <omp.h>

#include "CLI11.hpp"

#include "qcomb/errors.hpp"
#include "qcomb/identities.hpp"
#include "qcomb/oracle.hpp"
#include "qcomb/serialize.hpp"

namespace qcomb {

namespace {

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int parse_int(const std::string& text)
{
    int value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    return value;
}

struct Common {
    std::string format = "text";
    std::optional<std::uint64_t> cell_cap;
    int jobs = 0;

    EnumOptions enum_options() const
    {
        EnumOptions o;
        if (cell_cap) {
            o.cell_cap = *cell_cap;
        }
        return o;
    }
};

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--cell-cap", c.cell_cap,
                    "Largest enumeration cell (structures); overrides QCOMB_MAX_ENUM, default 10000000")
        ->check(CLI::PositiveNumber);
    sub->add_option("--jobs", c.jobs, "Worker threads; 0 uses the OpenMP default")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
}

std::optional<IntRange> optional_range(const std::string& text)
{
    if (text.empty()) {
        return std::nullopt;
    }
    try {
        return parse_range(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// ------------------------------------------------------------------ table

struct TableArgs {
    Common common;
    std::string family;
    std::string n = "0..5";
    std::string k;
    std::string r = "0";
};

int run_table(const TableArgs& a, std::ostream& out)
{
    Family family;
    try {
        family = parse_family(a.family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const IntRange n = *optional_range(a.n);
    const IntRange r = *optional_range(a.r);
    const IntRange k = optional_range(a.k).value_or(IntRange{0, n.hi});
    const auto rows = family_table(family, n, k, r);

    if (a.common.format == "json") {
        Json arr = Json::array();
        for (const auto& row : rows) {
            arr.push_back(to_json(row));
        }
        out << arr.dump(2) << '\n';
    } else if (a.common.format == "csv") {
        out << csv_header() << '\n';
        for (const auto& row : rows) {
            out << to_csv_row(row) << '\n';
        }
    } else {
        for (const auto& row : rows) {
            out << to_text(row) << '\n';
        }
    }
    return kOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
    Common common;
    std::vector<std::string> identities;
    bool all = false;
    bool default_grids = false;
    std::string m, n, k, r;
    std::optional<int> mn_max;
};

Grid apply_overrides(Grid grid, const VerifyArgs& a)
{
    const std::map<std::string, std::optional<IntRange>> overrides = {
        {"m", optional_range(a.m)}, {"n", optional_range(a.n)}, {"k", optional_range(a.k)}, {"r", optional_range(a.r)}};
    bool touched_mn = false;
    for (auto& [axis, range] : grid.ranges) {
        const auto& o = overrides.at(axis);
        if (o) {
            range = *o;
            touched_mn = touched_mn || axis == "m" || axis == "n";
        }
    }
    if (touched_mn) {
        grid.max_mn.reset();
    }
    if (a.mn_max) {
        grid.max_mn = *a.mn_max;
    }
    return grid;
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    if (a.all == !a.identities.empty()) {
        throw UsageError("verify needs exactly one of --identity or --all");
    }
    const bool overridden = !a.m.empty() || !a.n.empty() || !a.k.empty() || !a.r.empty() || a.mn_max;
    if (a.default_grids && overridden) {
        throw UsageError("--default-grids cannot be combined with range overrides");
    }
    if (a.mn_max && *a.mn_max < 0) {
        throw UsageError("--mn-max must be non-negative");
    }
    std::vector<std::string> names = a.all ? identity_names() : a.identities;
    for (const auto& name : names) {
        if (!is_registered(name)) {
            throw UsageError("unregistered identity '" + name + "'");
        }
    }

    CheckOptions options;
    options.enumeration = a.common.enum_options();
    options.jobs = a.common.jobs;
    options.exec = a.common.jobs == 1 ? Exec::serial : Exec::parallel;

    std::vector<IdentityReport> reports;
    for (const auto& name : names) {
        Grid grid = apply_overrides(default_grid(name), a);
        try {
            reports.push_back(check(name, grid, options));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }

    bool any_fail = false;
    for (const auto& r : reports) {
        any_fail = any_fail || r.status == Status::fail;
    }
    if (a.common.format == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) {
            arr.push_back(to_json(r));
        }
        out << arr.dump(2) << '\n';
    } else if (a.common.format == "csv") {
        out << "identity,status,cells_checked\n";
        for (const auto& r : reports) {
            out << r.identity << ',' << status_name(r.status) << ',' << r.cells_checked << '\n';
        }
    } else {
        std::size_t passed = 0;
        std::size_t failed = 0;
        for (const auto& r : reports) {
            out << summary_line(r) << '\n';
            passed += r.status == Status::pass;
            failed += r.status == Status::fail;
        }
        out << passed << " passed, " << failed << " failed, " << reports.size() - passed - failed << " skipped\n";
    }
    if (any_fail) {
        err << "verification found counterexamples\n";
    }
    return any_fail ? kCounterexample : kOk;
}

// ------------------------------------------------------------ oracle-diff

struct DiffArgs {
    Common common;
    std::string family;
    std::string n = "0..5";
    std::string k;
    std::string r = "0";
};

StructureFamily oracle_family(const std::string& name)
{
    if (name == "stirling2_q" || name == "partitions") {
        return StructureFamily::partitions;
    }
    if (name == "stirling1_q" || name == "perms") {
        return StructureFamily::perms;
    }
    if (name == "lah_q" || name == "lah") {
        return StructureFamily::lah;
    }
    if (name == "ext_lah" || name == "hsu_shiue") {
        return StructureFamily::ext_lah;
    }
    throw UsageError("family '" + name + "' has no oracle counterpart");
}

Value engine_value(StructureFamily f, int n, int k, int r)
{
    switch (f) {
    case StructureFamily::partitions: return stirling2_q(n, k, r);
    case StructureFamily::perms: return stirling1_q(n, k, r);
    case StructureFamily::lah: return lah_q(n, k, r);
    case StructureFamily::ext_lah: return hsu_shiue(n, k);
    }
    throw InternalError("unreachable family");
}

int run_oracle_diff(const DiffArgs& a, std::ostream& out)
{
    const StructureFamily family = oracle_family(a.family);
    const IntRange n = *optional_range(a.n);
    const IntRange r = *optional_range(a.r);
    const std::optional<IntRange> k = optional_range(a.k);
    if (family == StructureFamily::ext_lah && (r.lo != 0 || r.hi != 0)) {
        throw UsageError("ext_lah cells have no r parameter");
    }
    const EnumOptions opts = a.common.enum_options();
    const Exec exec = a.common.jobs == 1 ? Exec::serial : Exec::parallel;
    if (a.common.jobs > 0) {
        omp_set_num_threads(a.common.jobs);
    }

    struct Diff {
        int n, k, r;
        Value engine, oracle;
    };
    std::vector<Diff> diffs;
    for (int nn = n.lo; nn <= n.hi; ++nn) {
        for (int rr = r.lo; rr <= r.hi; ++rr) {
            const int k_lo = k ? k->lo : 0;
            const int k_hi = k ? std::min(k->hi, nn) : nn;
            for (int kk = k_lo; kk <= k_hi; ++kk) {
                const OracleValue o = oracle(family, nn, kk, rr, opts, exec);
                Value ov = std::visit([](const auto& v) -> Value { return v; }, o);
                Value ev = engine_value(family, nn, kk, rr);
                if (ev != ov) {
                    diffs.push_back({nn, kk, rr, std::move(ev), std::move(ov)});
                }
            }
        }
    }

    if (a.common.format == "json") {
        Json arr = Json::array();
        for (const auto& d : diffs) {
            arr.push_back(
                {{"n", d.n}, {"k", d.k}, {"r", d.r}, {"engine", to_json(d.engine)}, {"oracle", to_json(d.oracle)}});
        }
        out << arr.dump(2) << '\n';
    } else if (a.common.format == "csv") {
        out << "n,k,r,engine,oracle\n";
        for (const auto& d : diffs) {
            out << d.n << ',' << d.k << ',' << d.r << ',' << value_text(d.engine) << ',' << value_text(d.oracle)
                << '\n';
        }
    } else {
        for (const auto& d : diffs) {
            out << "n=" << d.n << " k=" << d.k << " r=" << d.r << ": engine=" << value_text(d.engine)
                << " oracle=" << value_text(d.oracle) << '\n';
        }
    }
    return diffs.empty() ? kOk : kCounterexample;
}

} // namespace

IntRange parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    IntRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_int(text);
    } else {
        r.lo = parse_int(text.substr(0, dots));
        r.hi = parse_int(text.substr(dots + 2));
    }
    if (r.lo < 0 || r.hi < 0) {
        throw std::invalid_argument("ranges must be non-negative: '" + text + "'");
    }
    if (r.lo > r.hi) {
        throw std::invalid_argument("empty range: '" + text + "'");
    }
    return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-Stirling, q-Lah and Hsu-Shiue tables with identity verification", "qcomb"};
    app.require_subcommand(1);

    TableArgs table;
    auto* t = app.add_subcommand("table", "Emit a table of engine values");
    t->add_option("--family", table.family, "stirling2_q | bell_q | lah_q | stirling1_q | hsu_shiue | gen_bell")
        ->required();
    t->add_option("--n", table.n, "n range a..b")->capture_default_str();
    t->add_option("--k", table.k, "k range (default 0..n, clipped to n)");
    t->add_option("--r", table.r, "r range")->capture_default_str();
    add_common(t, table.common);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check identities over parameter grids");
    v->add_option("--identity", verify.identities, "Identity name (repeatable)");
    v->add_flag("--all", verify.all, "Every registered identity");
    v->add_flag("--default-grids", verify.default_grids, "Use the declared default grids");
    v->add_option("--m", verify.m, "m range override");
    v->add_option("--n", verify.n, "n range override");
    v->add_option("--k", verify.k, "k range override");
    v->add_option("--r", verify.r, "r range override");
    v->add_option("--mn-max", verify.mn_max, "Bound on m+n; overriding m or n drops the default bound");
    add_common(v, verify.common);

    DiffArgs diff;
    auto* d = app.add_subcommand("oracle-diff", "Compare engine values with brute-force enumeration");
    d->add_option("--family", diff.family, "stirling2_q | stirling1_q | lah_q | ext_lah")->required();
    d->add_option("--n", diff.n, "n range")->capture_default_str();
    d->add_option("--k", diff.k, "k range (default 0..n)");
    d->add_option("--r", diff.r, "r range")->capture_default_str();
    add_common(d, diff.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (t->parsed()) {
            return run_table(table, out);
        }
        if (v->parsed()) {
            return run_verify(verify, out, err);
        }
        return run_oracle_diff(diff, out);
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << " (cell size " << to_string(e.estimate()) << ", cap "
            << to_string(e.cap()) << ")\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kUsage;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qcomb");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace qcomb
