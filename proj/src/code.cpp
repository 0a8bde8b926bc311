#include "cosetlab/code.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cosetlab {

const CosetRecord& SyndromeTable::at(std::uint64_t s) const {
    const auto& slot = recs_.at(s);
    if (!slot) throw std::logic_error("syndrome table has no record for this syndrome");
    return *slot;
}

namespace {

using Matrix = std::vector<std::vector<FieldElement>>;

Matrix rows_to_matrix(const WordSpace& ws, const std::vector<Word>& rows) {
    Matrix mat;
    for (const Word& r : rows) {
        std::vector<FieldElement> row;
        for (unsigned i = 1; i <= ws.n(); ++i) row.push_back(ws.coord(r, i));
        mat.push_back(std::move(row));
    }
    return mat;
}

}  // namespace

LinearCode::LinearCode(Field field, unsigned n, std::vector<Word> generator_rows)
    : space_(std::move(field), n),
      k_(static_cast<unsigned>(generator_rows.size())),
      gen_rows_(std::move(generator_rows)) {
    if (k_ < 1) throw std::invalid_argument("generator matrix needs at least one row");
    if (k_ > n) throw std::invalid_argument("dimension k exceeds length n");
    for (const Word& r : gen_rows_)
        if (!space_.is_standard_form(r))
            throw std::invalid_argument("generator rows must be standard-form words");

    const Field& f = space_.field();
    const unsigned nk = n - k_;

    // Reduce a copy of G to [I_k | A] with column swaps tracked.
    Matrix mat = rows_to_matrix(space_, gen_rows_);
    std::vector<unsigned> col(n);
    for (unsigned i = 0; i < n; ++i) col[i] = i;

    for (unsigned r = 0; r < k_; ++r) {
        unsigned pr = k_, pc = n;
        for (unsigned c = r; c < n && pc == n; ++c)
            for (unsigned rr = r; rr < k_; ++rr)
                if (!mat[rr][c].is_zero()) {
                    pr = rr;
                    pc = c;
                    break;
                }
        if (pc == n) throw std::invalid_argument("generator matrix does not have rank k");
        std::swap(mat[r], mat[pr]);
        if (pc != r) {
            for (unsigned rr = 0; rr < k_; ++rr) std::swap(mat[rr][r], mat[rr][pc]);
            std::swap(col[r], col[pc]);
        }
        FieldElement piv_inv = f.inv(mat[r][r]);
        for (unsigned c = 0; c < n; ++c) mat[r][c] = f.mul(mat[r][c], piv_inv);
        for (unsigned rr = 0; rr < k_; ++rr) {
            if (rr == r || mat[rr][r].is_zero()) continue;
            FieldElement factor = mat[rr][r];
            for (unsigned c = 0; c < n; ++c)
                mat[rr][c] = f.sub(mat[rr][c], f.mul(factor, mat[r][c]));
        }
    }

    // H in the permuted frame is [-A^T | I], mapped back through col[].
    for (unsigned s = 0; s < nk; ++s) {
        Word h = space_.zero_word();
        for (unsigned i = 0; i < k_; ++i)
            space_.set_coord(h, col[i] + 1, f.neg(mat[i][k_ + s]));
        space_.set_coord(h, col[k_ + s] + 1, f.one());
        check_rows_.push_back(std::move(h));
    }

    for (const Word& g : gen_rows_) {
        for (const Word& h : check_rows_) {
            FieldElement dot = f.zero();
            for (unsigned i = 1; i <= n; ++i)
                dot = f.add(dot, f.mul(space_.coord(g, i), space_.coord(h, i)));
            if (!dot.is_zero()) throw std::logic_error("derived check matrix fails G * H^T = 0");
        }
    }
}

std::vector<FieldElement> LinearCode::syndrome(const Word& w) const {
    const Field& f = space_.field();
    std::vector<FieldElement> s;
    s.reserve(check_rows_.size());
    for (const Word& h : check_rows_) {
        FieldElement dot = f.zero();
        for (unsigned i = 1; i <= n(); ++i)
            dot = f.add(dot, f.mul(space_.coord(h, i), space_.coord(w, i)));
        s.push_back(dot);
    }
    return s;
}

std::uint64_t LinearCode::syndrome_index(const Word& w) const {
    std::vector<FieldElement> s = syndrome(w);
    std::uint64_t idx = 0;
    for (const FieldElement& e : s) idx = idx * space_.field().size() + space_.field().index(e);
    return idx;
}

std::uint64_t LinearCode::syndrome_count() const {
    std::uint64_t c = 1;
    for (unsigned i = 0; i < redundancy(); ++i) c *= space_.field().size();
    return c;
}

std::vector<FieldElement> LinearCode::syndrome_at(std::uint64_t index) const {
    const unsigned q = space_.field().size();
    std::vector<FieldElement> s(redundancy(), space_.field().zero());
    for (unsigned r = redundancy(); r-- > 0;) {
        s[r] = space_.field().element(static_cast<unsigned>(index % q));
        index /= q;
    }
    return s;
}

std::string LinearCode::format_syndrome(const std::vector<FieldElement>& s) const {
    std::string out;
    for (std::size_t r = 0; r < s.size(); ++r) {
        if (r) out += ' ';
        std::vector<unsigned> digits = space_.field().coords(s[r]);
        for (unsigned j = 0; j < digits.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(digits[j]);
        }
    }
    return out.empty() ? "-" : out;
}

bool LinearCode::contains(const Word& w) const {
    for (const FieldElement& e : syndrome(w))
        if (!e.is_zero()) return false;
    return true;
}

std::vector<Word> LinearCode::codewords(std::uint64_t max_enum) const {
    const unsigned q = space_.field().size();
    std::uint64_t total = 1;
    for (unsigned r = 0; r < k_; ++r) {
        total *= q;
        if (total > max_enum) throw BoundError("codeword enumeration q^k", total, max_enum);
    }
    std::vector<Word> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Word c = space_.zero_word();
        std::uint64_t t = idx;
        for (unsigned r = 0; r < k_; ++r) {
            FieldElement a = space_.field().element(static_cast<unsigned>(t % q));
            t /= q;
            if (!a.is_zero()) {
                for (unsigned i = 1; i <= n(); ++i) {
                    FieldElement summand = space_.field().mul(a, space_.coord(gen_rows_[r], i));
                    space_.set_coord(c, i, space_.field().add(space_.coord(c, i), summand));
                }
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

unsigned LinearCode::min_distance(std::uint64_t max_enum) const {
    unsigned best = n() + 1;
    for (const Word& c : codewords(max_enum)) {
        unsigned w = space_.hamming_weight(c);
        if (w != 0 && w < best) best = w;
    }
    return best;
}

unsigned LinearCode::error_capacity(std::uint64_t max_enum) const {
    return (min_distance(max_enum) - 1) / 2;
}

unsigned covering_radius(const SyndromeTable& table) {
    if (!table.complete())
        throw std::invalid_argument("covering radius needs a complete syndrome table");
    unsigned rho = 0;
    for (std::uint64_t s = 0; s < table.slot_count(); ++s)
        if (table.at(s).weight > rho) rho = table.at(s).weight;
    return rho;
}

namespace {

struct FixtureReader {
    std::istream& in;
    int line_no = 0;

    // Next meaningful line split into tokens.
    std::vector<std::string> next_tokens() {
        std::string text;
        while (std::getline(in, text)) {
            ++line_no;
            std::istringstream ls(text);
            std::vector<std::string> tokens;
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (tokens.empty() || tokens[0][0] == '#') continue;
            return tokens;
        }
        throw ParseError("unexpected end of file", line_no);
    }

    unsigned keyed_uint(const std::string& key) {
        auto tokens = next_tokens();
        if (tokens.size() != 2 || tokens[0] != key)
            throw ParseError("expected '" + key + " <value>'", line_no);
        return parse_uint(tokens[1]);
    }

    unsigned parse_uint(const std::string& tok) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("expected a nonnegative integer, got '" + tok + "'", line_no);
        return static_cast<unsigned>(std::stoul(tok));
    }
};

}  // namespace

LinearCode parse_code(std::istream& in) {
    FixtureReader reader{in};
    unsigned p = reader.keyed_uint("p");
    unsigned m = reader.keyed_uint("m");

    FieldParams params;
    params.p = p;
    params.m = m;
    if (m > 1) {
        auto tokens = reader.next_tokens();
        if (tokens.empty() || tokens[0] != "poly")
            throw ParseError("expected 'poly <c0> ... <cm>' for m > 1", reader.line_no);
        for (std::size_t i = 1; i < tokens.size(); ++i)
            params.poly.push_back(reader.parse_uint(tokens[i]));
        if (params.poly.size() != m + 1)
            throw ParseError("modulus needs m + 1 coefficients", reader.line_no);
    }

    unsigned n = reader.keyed_uint("n");
    unsigned k = reader.keyed_uint("k");

    auto g_line = reader.next_tokens();
    if (g_line.size() != 1 || g_line[0] != "G")
        throw ParseError("expected a line containing only 'G'", reader.line_no);

    Field field = [&]() {
        try {
            return Field(params);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), reader.line_no);
        }
    }();
    WordSpace ws(field, n);

    std::vector<Word> rows;
    for (unsigned r = 0; r < k; ++r) {
        auto tokens = reader.next_tokens();
        std::string joined;
        for (const auto& t : tokens) {
            if (!joined.empty()) joined += ' ';
            joined += t;
        }
        try {
            rows.push_back(ws.parse_word(joined));
        } catch (const ParseError& e) {
            throw ParseError(e.raw(), reader.line_no);
        }
    }

    try {
        return LinearCode(std::move(field), n, std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), reader.line_no);
    }
}

LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open code file '" + path + "'");
    return parse_code(in);
}

}  // namespace cosetlab
