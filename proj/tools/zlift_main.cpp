// zlift command line: run the lift engines, verify their output, generate
// test instances, and run the finite lattice-ring calculus.
//
// Exit codes: 0 success, 1 usage/format/verification failure,
// 2 rows not a basis mod p^nu, 3 stabilization timeout.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zlift/io.hpp"
#include "zlift/lattice_ring.hpp"
#include "zlift/lift_finite.hpp"
#include "zlift/lift_stream.hpp"
#include "zlift/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace zlift;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotABasis = 2;
constexpr int kExitTimeout = 3;

// Reads either a file or standard input ("-").
std::string slurp_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open input file '" + path + "'");
        buf << f.rdbuf();
    }
    return buf.str();
}

// Standalone matrix inputs must not carry trailing content.
void expect_only_whitespace_left(std::istream& in) {
    std::string token;
    if (in >> token) throw ParseError("unexpected trailing content '" + token + "' after matrix");
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

IntMatrix matrix_from_json(const json& j) {
    IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& data = j.at("data");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Integer x;
            if (mpz_set_str(x.get_mpz_t(), data.at(i).at(c).get<std::string>().c_str(), 10) != 0)
                throw ParseError("invalid integer in json matrix");
            m(i, c) = std::move(x);
        }
    return m;
}

json report_to_json(const VerificationReport& report) {
    json congruence = json::array();
    for (auto ok : report.congruence_ok) congruence.push_back(static_cast<bool>(ok));
    return json{{"congruence_ok", std::move(congruence)},
                {"unimodular_ok", report.unimodular_ok},
                {"basis_mod_q_ok", report.basis_mod_q_ok},
                {"units_ok", report.units_ok},
                {"all_ok", report.all_ok()},
                {"details", report.details}};
}

void print_report_line(std::ostream& out, const VerificationReport& report) {
    auto flag = [](bool ok) { return ok ? "ok" : "FAIL"; };
    bool congruence = true;
    for (auto ok : report.congruence_ok) congruence = congruence && ok;
    out << "verification all=" << flag(report.all_ok()) << " congruence=" << flag(congruence)
        << " unimodular=" << flag(report.unimodular_ok)
        << " basis_mod_q=" << flag(report.basis_mod_q_ok) << " units=" << flag(report.units_ok)
        << '\n';
    if (!report.all_ok() && !report.details.empty()) out << "details " << report.details << '\n';
}

struct LiftDocument {
    std::string command = "lift";
    Integer prime;
    unsigned exponent = 1;
    IntMatrix input;
    IntMatrix lifted;
    std::vector<Integer> units;
    std::vector<std::size_t> pivots;
    std::optional<std::size_t> loops;
    std::vector<std::size_t> stabilized_at;
    std::optional<VerificationReport> report;
};

void write_document_text(std::ostream& out, const LiftDocument& doc) {
    out << "zlift-" << doc.command << '\n';
    out << "modulus " << doc.prime.get_str() << ' ' << doc.exponent << '\n';
    out << "units";
    for (const auto& u : doc.units) out << ' ' << u.get_str();
    out << '\n';
    out << "pivots";
    for (auto c : doc.pivots) out << ' ' << c;
    out << '\n';
    if (doc.loops) {
        out << "loops " << *doc.loops << '\n';
        out << "stabilized-at";
        for (auto l : doc.stabilized_at) out << ' ' << l;
        out << '\n';
    }
    out << "input\n";
    write_matrix(out, doc.input);
    out << "lifted\n";
    write_matrix(out, doc.lifted);
    if (doc.report) print_report_line(out, *doc.report);
}

void write_document_json(std::ostream& out, const LiftDocument& doc) {
    json j{{"command", doc.command},
           {"modulus", json{{"prime", doc.prime.get_str()}, {"exponent", doc.exponent}}},
           {"input", matrix_to_json(doc.input)},
           {"lifted", matrix_to_json(doc.lifted)}};
    json units = json::array();
    for (const auto& u : doc.units) units.push_back(u.get_str());
    j["units"] = std::move(units);
    j["pivots"] = doc.pivots;
    if (doc.loops) {
        j["loops"] = *doc.loops;
        j["stabilized_at"] = doc.stabilized_at;
    }
    if (doc.report) j["verification"] = report_to_json(*doc.report);
    out << j.dump(2) << '\n';
}

LiftDocument parse_document_text(const std::string& text) {
    LiftDocument doc;
    bool have_modulus = false, have_input = false, have_lifted = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "modulus") {
            std::string p;
            if (!(ls >> p >> doc.exponent)) throw ParseError("bad modulus line");
            if (mpz_set_str(doc.prime.get_mpz_t(), p.c_str(), 10) != 0)
                throw ParseError("bad prime in modulus line");
            have_modulus = true;
        } else if (word == "units") {
            std::string token;
            while (ls >> token) {
                Integer u;
                if (mpz_set_str(u.get_mpz_t(), token.c_str(), 10) != 0)
                    throw ParseError("bad unit '" + token + "'");
                doc.units.push_back(std::move(u));
            }
        } else if (word == "input") {
            doc.input = read_matrix(in);
            have_input = true;
        } else if (word == "lifted") {
            doc.lifted = read_matrix(in);
            have_lifted = true;
        }
        // other lines (pivots, loops, verification, header) are informational
    }
    if (!have_modulus || !have_input || !have_lifted)
        throw ParseError("document is missing a modulus/input/lifted section");
    return doc;
}

LiftDocument parse_document_json(const std::string& text) {
    json j = json::parse(text);
    LiftDocument doc;
    if (mpz_set_str(doc.prime.get_mpz_t(),
                    j.at("modulus").at("prime").get<std::string>().c_str(), 10) != 0)
        throw ParseError("bad prime in json document");
    doc.exponent = j.at("modulus").at("exponent").get<unsigned>();
    doc.input = matrix_from_json(j.at("input"));
    doc.lifted = matrix_from_json(j.at("lifted"));
    for (const auto& u : j.at("units")) {
        Integer x;
        if (mpz_set_str(x.get_mpz_t(), u.get<std::string>().c_str(), 10) != 0)
            throw ParseError("bad unit in json document");
        doc.units.push_back(std::move(x));
    }
    return doc;
}

LiftDocument parse_document(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_document_json(text);
    return parse_document_text(text);
}

struct CommonOptions {
    std::string prime = "2";
    unsigned exponent = 1;
    std::string input = "-";
    bool json_output = false;
    bool no_verify = false;
};

Modulus make_modulus(const CommonOptions& opt) {
    Integer p;
    if (mpz_set_str(p.get_mpz_t(), opt.prime.c_str(), 10) != 0)
        throw ParseError("invalid prime '" + opt.prime + "'");
    return Modulus(p, opt.exponent);
}

int run_lift(const CommonOptions& opt) {
    Modulus mod = make_modulus(opt);
    std::istringstream in(slurp_input(opt.input));
    IntMatrix a = read_matrix(in);
    expect_only_whitespace_left(in);
    LiftResult result = get_basis_finite(a, mod);

    LiftDocument doc;
    doc.command = "lift";
    doc.prime = mod.prime();
    doc.exponent = mod.exponent();
    doc.input = a;
    doc.lifted = result.lifted;
    doc.units = result.units;
    doc.pivots = result.pivots.cols();
    if (!opt.no_verify) doc.report = verify_lift(a, result);

    if (opt.json_output)
        write_document_json(std::cout, doc);
    else
        write_document_text(std::cout, doc);
    if (doc.report && !doc.report->all_ok()) {
        std::cerr << "zlift: verification failed: " << doc.report->details << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int run_lift_stream(const CommonOptions& opt, const std::string& fixture,
                    std::size_t target_rows, std::size_t max_loops) {
    Modulus mod = make_modulus(opt);
    std::unique_ptr<RowStream> stream;
    std::size_t file_rows = 0;
    if (!fixture.empty()) {
        stream = make_fixture_stream(fixture, mod);
        if (target_rows == 0)
            throw ParseError("--target-rows is required with --fixture");
    } else {
        std::istringstream in(slurp_input(opt.input));
        auto rows = read_sparse_rows(in);
        file_rows = rows.size();
        if (target_rows == 0) target_rows = file_rows;
        if (target_rows == 0) throw ParseError("empty stream input");
        stream = std::make_unique<VectorRowStream>(std::move(rows));
    }
    if (max_loops == 0) max_loops = 4 * target_rows;

    EliminationState state(std::move(stream), mod);
    StreamLiftReport report = run_until(state, target_rows, max_loops);

    // Materialize the consumed prefix of the source at the report width so
    // the document is self-contained and verifiable.
    IntMatrix input(report.lifted.rows(), report.lifted.cols());
    for (std::size_t i = 0; i < input.rows(); ++i)
        for (const auto& [col, value] : state.consumed_rows()[i].entries())
            input(i, col) = value;

    LiftDocument doc;
    doc.command = "lift-stream";
    doc.prime = mod.prime();
    doc.exponent = mod.exponent();
    doc.input = input;
    doc.lifted = report.lifted;
    doc.units = report.units;
    doc.pivots = report.pivots.cols();
    doc.loops = report.loops_executed;
    doc.stabilized_at = report.stabilized_at_loop;
    if (!opt.no_verify) doc.report = verify_lift(input, report, mod);

    if (opt.json_output)
        write_document_json(std::cout, doc);
    else
        write_document_text(std::cout, doc);
    if (doc.report && !doc.report->all_ok()) {
        std::cerr << "zlift: verification failed: " << doc.report->details << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int run_verify(const std::string& input, bool json_output) {
    LiftDocument doc = parse_document(slurp_input(input));
    Modulus mod(doc.prime, doc.exponent);
    VerificationReport report = verify_lift(doc.input, doc.lifted, doc.units, mod);
    if (json_output)
        std::cout << report_to_json(report).dump(2) << '\n';
    else
        print_report_line(std::cout, report);
    return report.all_ok() ? kExitOk : kExitUsage;
}

int run_generate(const CommonOptions& opt, std::size_t n, std::uint64_t seed, long ops) {
    Modulus mod = make_modulus(opt);
    std::size_t op_count = ops >= 0 ? static_cast<std::size_t>(ops) : 8 + 2 * n;
    IntMatrix m = random_basis_mod_q(n, mod, seed, op_count);
    write_matrix(std::cout, m);
    return kExitOk;
}

std::string atom_set_to_string(AtomSet mask) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (unsigned a = 0; a < 64; ++a)
        if (mask & (AtomSet{1} << a)) {
            if (!first) out << ',';
            out << a;
            first = false;
        }
    out << '}';
    return out.str();
}

int run_decompose(const std::string& input, bool json_output) {
    std::istringstream in(slurp_input(input));
    IntMatrix gens = read_matrix(in);
    expect_only_whitespace_left(in);
    unsigned k = static_cast<unsigned>(gens.cols());
    std::vector<LatticeRingElement> elements;
    for (std::size_t i = 0; i < gens.rows(); ++i) {
        LatticeRingElement e = zero_element(k);
        for (unsigned a = 0; a < k; ++a) e.coords[a] = gens(i, a);
        elements.push_back(std::move(e));
    }
    OrthogonalDecomposition dec = decompose_ideal(k, elements);

    if (json_output) {
        json pairs = json::array();
        for (const auto& [mask, mult] : dec.pairs)
            pairs.push_back(json{{"idempotent", atom_set_to_string(mask)},
                                 {"multiplicity", mult.get_str()}});
        json gen = json::array();
        for (const auto& c : dec.generator(k).coords) gen.push_back(c.get_str());
        std::cout << json{{"atoms", k}, {"pairs", std::move(pairs)}, {"generator", std::move(gen)}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "zlift-decomposition\natoms " << k << "\npairs " << dec.pairs.size() << '\n';
        for (const auto& [mask, mult] : dec.pairs)
            std::cout << "pair " << atom_set_to_string(mask) << " multiplicity "
                      << mult.get_str() << '\n';
        std::cout << "generator";
        for (const auto& c : dec.generator(k).coords) std::cout << ' ' << c.get_str();
        std::cout << '\n';
    }
    return kExitOk;
}

// splitmix64, matching the generator used by the instance generator.
std::uint64_t mix64(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

int run_free_basis(unsigned atoms, const std::string& order_name, std::uint64_t seed,
                   bool json_output) {
    FiniteBooleanAlgebra b(atoms);
    std::vector<AtomSet> order = b.nonzero_idempotents();  // "value" order
    if (order_name == "atoms-first") {
        std::stable_sort(order.begin(), order.end(), [](AtomSet x, AtomSet y) {
            return std::popcount(x) < std::popcount(y);
        });
    } else if (order_name == "random") {
        std::uint64_t s = seed;
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[mix64(s) % i]);
    } else if (order_name != "value") {
        throw ParseError("unknown order '" + order_name + "' (value, atoms-first, random)");
    }

    std::vector<AtomSet> basis = free_basis(b, order);
    IntMatrix coords = coordinate_matrix(atoms, basis);
    Integer det = det_exact(coords);

    if (json_output) {
        json elements = json::array();
        for (auto e : basis) elements.push_back(atom_set_to_string(e));
        std::cout << json{{"atoms", atoms},
                          {"elements", std::move(elements)},
                          {"determinant", det.get_str()}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "zlift-free-basis\natoms " << atoms << "\nelements " << basis.size() << '\n';
        for (auto e : basis) std::cout << "element " << atom_set_to_string(e) << '\n';
        std::cout << "coordinate-matrix\n";
        write_matrix(std::cout, coords);
        std::cout << "determinant " << det.get_str() << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact basis lifting modulo prime powers"};
    app.require_subcommand(1);

    CommonOptions opt;

    auto* lift = app.add_subcommand("lift", "lift a finite basis of (Z/p^nu Z)^n to a Z-basis");
    lift->add_option("--prime", opt.prime)->required();
    lift->add_option("--exponent", opt.exponent)->required();
    lift->add_option("--input", opt.input, "matrix file, or - for stdin");
    lift->add_flag("--json", opt.json_output, "emit the structured document");
    lift->add_flag("--no-verify", opt.no_verify, "skip the verification oracle");

    std::string fixture;
    std::size_t target_rows = 0, max_loops = 0;
    auto* lstream = app.add_subcommand("lift-stream", "streaming lift of a row-finite matrix");
    lstream->add_option("--prime", opt.prime)->required();
    lstream->add_option("--exponent", opt.exponent)->required();
    lstream->add_option("--input", opt.input, "sparse stream file, or - for stdin");
    lstream->add_option("--fixture", fixture, "procedural stream: identity, banded, blocked");
    lstream->add_option("--target-rows", target_rows, "rows to stabilize (default: all rows)");
    lstream->add_option("--max-loops", max_loops, "loop budget (default: 4 * target)");
    lstream->add_flag("--json", opt.json_output);
    lstream->add_flag("--no-verify", opt.no_verify);

    auto* verify = app.add_subcommand("verify", "re-check a lift document (text or json)");
    verify->add_option("--input", opt.input, "document file, or - for stdin");
    verify->add_flag("--json", opt.json_output);

    std::size_t gen_n = 4;
    std::uint64_t seed = 0;
    long gen_ops = -1;
    auto* generate = app.add_subcommand("generate", "emit a random basis-mod-q instance");
    generate->add_option("--n", gen_n)->required();
    generate->add_option("--prime", opt.prime)->required();
    generate->add_option("--exponent", opt.exponent)->required();
    generate->add_option("--seed", seed);
    generate->add_option("--ops", gen_ops, "elementary operations (default 8 + 2n)");

    auto* decompose = app.add_subcommand(
        "decompose-ideal", "orthogonal idempotent decomposition of a finitely generated ideal");
    decompose->add_option("--input", opt.input, "generators as a matrix (rows), atoms as columns");
    decompose->add_flag("--json", opt.json_output);

    unsigned atoms = 2;
    std::string order_name = "value";
    auto* fbasis = app.add_subcommand("free-basis", "greedy free Z-basis of the lattice ring");
    fbasis->add_option("--atoms", atoms)->required();
    fbasis->add_option("--order", order_name, "value | atoms-first | random");
    fbasis->add_option("--seed", seed, "shuffle seed for --order random");
    fbasis->add_flag("--json", opt.json_output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (lift->parsed()) return run_lift(opt);
        if (lstream->parsed()) return run_lift_stream(opt, fixture, target_rows, max_loops);
        if (verify->parsed()) return run_verify(opt.input, opt.json_output);
        if (generate->parsed()) return run_generate(opt, gen_n, seed, gen_ops);
        if (decompose->parsed()) return run_decompose(opt.input, opt.json_output);
        if (fbasis->parsed()) return run_free_basis(atoms, order_name, seed, opt.json_output);
    } catch (const NotABasisModP& e) {
        std::cerr << "zlift: The rows of A do not form a basis modulo p^nu (" << e.what()
                  << ")\n";
        return kExitNotABasis;
    } catch (const StabilizationTimeout& e) {
        std::cerr << "zlift: stabilization timeout: " << e.what() << '\n';
        return kExitTimeout;
    } catch (const json::exception& e) {
        std::cerr << "zlift: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "zlift: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
