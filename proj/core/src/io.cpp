#include "zlift/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace zlift {

namespace {

Integer parse_integer(const std::string& token) {
    Integer x;
    // mpz set_str accepts an optional sign and decimal digits only.
    if (token.empty() || mpz_set_str(x.get_mpz_t(), token.c_str(), 10) != 0)
        throw ParseError("invalid integer '" + token + "'");
    return x;
}

}  // namespace

IntMatrix read_matrix(std::istream& in) {
    std::size_t rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw ParseError("matrix header 'rows cols' expected");
    IntMatrix m(rows, cols);
    std::string token;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (!(in >> token))
                throw ParseError("matrix data ended early at row " + std::to_string(i));
            m(i, j) = parse_integer(token);
        }
    return m;
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j).get_str();
        }
        out << '\n';
    }
}

std::vector<SparseRow> read_sparse_rows(std::istream& in) {
    std::vector<SparseRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line == ".") break;
        std::istringstream ls(line);
        std::vector<std::pair<std::size_t, Integer>> entries;
        std::string token;
        while (ls >> token) {
            auto colon = token.find(':');
            if (colon == std::string::npos)
                throw ParseError("sparse entry '" + token + "' is not col:value");
            std::size_t col = 0;
            try {
                col = std::stoul(token.substr(0, colon));
            } catch (const std::exception&) {
                throw ParseError("invalid column in sparse entry '" + token + "'");
            }
            entries.emplace_back(col, parse_integer(token.substr(colon + 1)));
        }
        rows.push_back(SparseRow::from_pairs(std::move(entries)));
    }
    return rows;
}

void write_sparse_rows(std::ostream& out, std::span<const SparseRow> rows) {
    for (const auto& row : rows) {
        bool first = true;
        for (const auto& [col, value] : row.entries()) {
            if (!first) out << ' ';
            out << col << ':' << value.get_str();
            first = false;
        }
        out << '\n';
    }
    out << ".\n";
}

std::unique_ptr<RowStream> open_stream(std::istream& in) {
    return std::make_unique<VectorRowStream>(read_sparse_rows(in));
}

std::unique_ptr<RowStream> make_fixture_stream(std::string_view name, const Modulus& mod) {
    if (name == "identity") {
        return std::make_unique<GeneratorRowStream>([](std::size_t i) {
            return SparseRow::from_pairs({{i, Integer(1)}});
        });
    }
    if (name == "banded") {
        Integer q = mod.value();
        return std::make_unique<GeneratorRowStream>([q](std::size_t i) {
            return SparseRow::from_pairs({{i, Integer(1)}, {i + 1, q}});
        });
    }
    if (name == "blocked") {
        // Needs p nonzero mod q, i.e. nu >= 2, to actually block column 0.
        if (mod.exponent() < 2)
            throw ParseError("fixture 'blocked' requires exponent >= 2");
        Integer p = mod.prime();
        return std::make_unique<GeneratorRowStream>([p](std::size_t i) {
            return SparseRow::from_pairs({{0, p}, {i + 1, Integer(1)}});
        });
    }
    throw ParseError("unknown fixture '" + std::string(name) +
                     "' (known: identity, banded, blocked)");
}

}  // namespace zlift
