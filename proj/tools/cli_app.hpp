#ifndef BOURBAKI_TOOLS_CLI_APP_HPP
#define BOURBAKI_TOOLS_CLI_APP_HPP

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <bourbaki/classify.hpp>
#include <bourbaki/counts.hpp>
#include <bourbaki/dot.hpp>
#include <bourbaki/error.hpp>
#include <bourbaki/expander.hpp>
#include <bourbaki/expression.hpp>
#include <bourbaki/fixpoint/cantor.hpp>
#include <bourbaki/fixpoint/tarski.hpp>
#include <bourbaki/hf/lang.hpp>
#include <bourbaki/instance_io.hpp>
#include <bourbaki/interchange.hpp>
#include <bourbaki/linear.hpp>

namespace bourbaki::cli {

enum Exit : int { ok = 0, failure = 1, usage = 2 };

// Thrown for input problems that are the caller's fault at the command-line
// level (missing input, conflicting sources).
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Input {
    std::vector<std::string> inline_text;
    std::string file;

    void attach(CLI::App* cmd, const std::string& what)
    {
        cmd->add_option("input", inline_text, what + " (inline)");
        cmd->add_option("-f,--file", file, what + " read from a file");
    }

    bool given() const { return !inline_text.empty() || !file.empty(); }

    std::string read() const
    {
        if (!inline_text.empty() && !file.empty())
            throw UsageError("give either inline input or --file, not both");
        if (!file.empty()) {
            std::ifstream in(file, std::ios::binary);
            if (!in)
                throw Error("cannot read '" + file + "'");
            return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        }
        if (inline_text.empty())
            throw UsageError("no input given");
        std::string out;
        for (const auto& w : inline_text) {
            if (!out.empty())
                out += ' ';
            out += w;
        }
        return out;
    }
};

inline Natural parse_natural(const std::string& s)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("expected a natural number, got '" + s + "'");
    return Natural(s);
}

inline bool looks_linear(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#')
            continue;
        return line.compare(b, 6, "signs:") == 0;
    }
    return false;
}

inline Assembly assembly_of(const std::string& text)
{
    if (looks_linear(text))
        return delinearize(parse_linear_text(text));
    return expand(parse_expression(text));
}

inline void print_counts(std::ostream& out, const CountVector& raw)
{
    CountVector c = user_facing(raw);
    out << "signs: " << to_decimal(c.signs) << "\nlinks: " << to_decimal(c.links) << "\n";
    out << "occurrences:";
    for (const auto& [x, n] : c.occ)
        out << ' ' << x << '=' << to_decimal(n);
    out << "\n";
}

} // namespace detail

// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bourbaki assemblies, exact counts and a hereditarily finite set lab", "bourbaki"};
    app.require_subcommand(1, 1);
    std::size_t budget = default_budget;
    app.add_option("--budget", budget, "materialization budget in signs")->capture_default_str();

    // expand
    auto* expandCmd = app.add_subcommand("expand", "expand an expression to a linear assembly");
    detail::Input expandIn;
    expandIn.attach(expandCmd, "expression");
    bool expandJson = false, expandGlyphs = false;
    expandCmd->add_flag("--json", expandJson, "canonical JSON form");
    expandCmd->add_flag("--glyphs", expandGlyphs, "print signs as glyphs only");

    // count
    auto* countCmd = app.add_subcommand("count", "exact sign, link and occurrence counts");
    detail::Input countIn;
    countIn.attach(countCmd, "expression");
    bool symbolic = false, materialize = false, countJson = false;
    std::string countNumeral;
    auto* symFlag = countCmd->add_flag("--symbolic", symbolic, "count by the substitution laws (default)");
    auto* matFlag = countCmd->add_flag("--materialize", materialize, "count by building the assembly");
    symFlag->excludes(matFlag);
    countCmd->add_flag("--json", countJson, "canonical JSON form");
    countCmd->add_option("--numeral", countNumeral, "count the numeral N instead of an expression");

    // numeral
    auto* numeralCmd = app.add_subcommand("numeral", "count row of the numeral N");
    std::string numeralN;
    bool numeralJson = false, numeralTable = false;
    numeralCmd->add_option("N", numeralN, "natural number")->required();
    numeralCmd->add_flag("--json", numeralJson, "canonical JSON form");
    numeralCmd->add_flag("--table", numeralTable, "rows 0..N");

    // classify
    auto* classifyCmd = app.add_subcommand("classify", "Term, Relation or Neither");
    detail::Input classifyIn;
    classifyIn.attach(classifyCmd, "expression or linear assembly");

    // formative
    auto* formativeCmd = app.add_subcommand("formative", "verify a formative construction");
    detail::Input formativeIn;
    formativeIn.attach(formativeCmd, "sequence of linear assemblies, blank-line separated");
    bool construct = false;
    formativeCmd->add_flag("--construct", construct, "print the canonical construction of an expression instead");

    // hf
    auto* hfCmd = app.add_subcommand("hf", "evaluate an HF set program");
    detail::Input hfIn;
    hfIn.attach(hfCmd, "program");
    bool hfDisplay = false;
    hfCmd->add_flag("--numerals", hfDisplay, "print numerals as decimals");

    // fixed-point witnesses
    auto* tarskiCmd = app.add_subcommand("tarski", "least and greatest fixed points of a monotone map");
    detail::Input tarskiIn;
    tarskiIn.attach(tarskiCmd, "instance");
    bool tarskiJson = false;
    tarskiCmd->add_flag("--json", tarskiJson, "canonical JSON form");

    auto* cbCmd = app.add_subcommand("cb", "bijection from two injections");
    detail::Input cbIn;
    cbIn.attach(cbCmd, "instance");
    bool cbJson = false;
    cbCmd->add_flag("--json", cbJson, "canonical JSON form");

    auto* koenigCmd = app.add_subcommand("koenig", "tuple outside a family of small parts of a product");
    detail::Input koenigIn;
    koenigIn.attach(koenigCmd, "instance");
    bool koenigJson = false;
    koenigCmd->add_flag("--json", koenigJson, "canonical JSON form");

    auto* dotCmd = app.add_subcommand("dot", "Graphviz rendering of an assembly");
    detail::Input dotIn;
    dotIn.attach(dotCmd, "expression or linear assembly");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        // help requests exit 0; everything else is a usage error
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (expandCmd->parsed()) {
            LinearAssembly l = linearize(expand(parse_expression(expandIn.read())), budget);
            if (expandJson)
                out << json::linear_to_json(l).dump() << "\n";
            else if (expandGlyphs)
                out << to_glyphs(l) << "\n";
            else
                out << to_text(l);
        } else if (countCmd->parsed()) {
            Expression e;
            if (!countNumeral.empty()) {
                if (countIn.given())
                    throw UsageError("--numeral takes no other input");
                e = ex::numeral(detail::parse_natural(countNumeral));
            } else {
                e = parse_expression(countIn.read());
            }
            CountVector c = materialize ? count_materialized(expand(e), budget) : count_symbolic(e);
            if (countJson && !countNumeral.empty())
                out << json::numeral_row_to_json(e.number, c).dump() << "\n";
            else if (countJson)
                out << json::counts_to_json(c).dump() << "\n";
            else
                detail::print_counts(out, c);
        } else if (numeralCmd->parsed()) {
            Natural n = detail::parse_natural(numeralN);
            std::size_t first = numeralTable ? 0 : numeral_index(n);
            NumeralCounter counter;
            json::Json rows = json::Json::array();
            for (std::size_t k = first; k <= numeral_index(n); ++k) {
                CountVector c = counter(k);
                if (numeralJson)
                    rows.push_back(json::numeral_row_to_json(k, c));
                else
                    out << k << ' ' << to_decimal(c.signs) << ' ' << to_decimal(c.links) << "\n";
            }
            if (numeralJson)
                out << (numeralTable ? rows.dump() : rows.front().dump()) << "\n";
        } else if (classifyCmd->parsed()) {
            std::string text = classifyIn.read();
            Classification c = detail::looks_linear(text) ? classify(parse_linear_text(text))
                                                          : classify(expand(parse_expression(text)));
            out << to_string(c) << "\n";
        } else if (formativeCmd->parsed()) {
            std::string text = formativeIn.read();
            if (construct) {
                bool first = true;
                for (const Assembly& a : formative_construction(detail::assembly_of(text))) {
                    if (!first)
                        out << "\n";
                    first = false;
                    out << to_text(linearize(a, budget));
                }
                return ok;
            }
            std::vector<LinearAssembly> seq;
            for (const auto& p : io::split_paragraphs(text))
                seq.push_back(parse_linear_text(p));
            FormativeReport rep = verify_formative(seq);
            std::size_t justified = rep.valid ? rep.steps.size() : *rep.failure - 1;
            for (std::size_t k = 0; k < justified && k < rep.steps.size(); ++k)
                out << k + 1 << ' ' << rep.steps[k].rule << ' ' << to_string(rep.steps[k].sort) << "\n";
            if (!rep.valid) {
                out << "invalid at element " << *rep.failure << ": " << rep.reason << "\n";
                return failure;
            }
            out << "valid\n";
        } else if (hfCmd->parsed()) {
            hf::Value v = hf::evaluate_hf(hfIn.read());
            if (hfDisplay && std::holds_alternative<hf::HfSet>(v))
                out << hf::to_display(std::get<hf::HfSet>(v)) << "\n";
            else
                out << hf::to_string(v) << "\n";
        } else if (tarskiCmd->parsed()) {
            fix::MonotoneMap m = io::parse_tarski_instance(tarskiIn.read());
            fix::TarskiExtrema t = fix::tarski_extrema(m);
            if (tarskiJson) {
                out << json::tarski_to_json(t).dump() << "\n";
            } else {
                out << "v: " << hf::to_display(t.v) << "\nw: " << hf::to_display(t.w) << "\n";
                out << "fixed points: " << hf::to_display(m.index().set_of(m.fixed_points())) << "\n";
            }
        } else if (cbCmd->parsed()) {
            fix::CantorBernsteinResult r = fix::cantor_bernstein(io::parse_cb_instance(cbIn.read()));
            if (cbJson) {
                out << json::cantor_bernstein_to_json(r).dump() << "\n";
            } else {
                out << "A: " << hf::to_display(r.A) << "\n";
                for (const auto& [x, y] : r.bijection)
                    out << hf::to_display(x) << " -> " << hf::to_display(y) << "\n";
            }
        } else if (koenigCmd->parsed()) {
            io::KoenigInstance k = io::parse_koenig_instance(koenigIn.read());
            fix::KoenigResult r = fix::koenig_uncovered(k.B, k.A);
            if (koenigJson) {
                out << json::koenig_to_json(r).dump() << "\n";
            } else {
                out << "tuple:";
                for (const auto& x : r.components)
                    out << ' ' << hf::to_display(x);
                out << "\nsum: " << to_decimal(r.sum) << "\nproduct: " << to_decimal(r.product) << "\n";
                out << "uncovered: " << (r.uncovered ? "yes" : "no") << "\n";
            }
        } else if (dotCmd->parsed()) {
            out << to_dot(detail::assembly_of(dotIn.read()), budget);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const Error& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: " << msg << "\n";
        return failure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return failure;
    }
    return ok;
}

} // namespace bourbaki::cli

#endif // BOURBAKI_TOOLS_CLI_APP_HPP
