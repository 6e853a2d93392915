#include "kvl/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace kvl {

namespace {

constexpr std::string_view kMagic = "KVLF";
constexpr int kVersion = 1;

struct Tokenizer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos == text.size();
    }

    // Next whitespace-delimited token; offset points at its first byte.
    std::string_view next(std::size_t& offset) {
        skip_ws();
        if (pos == text.size())
            throw FormatError("unexpected end of input at byte " + std::to_string(pos));
        offset = pos;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        return text.substr(start, pos - start);
    }

    long next_int(std::size_t& offset) {
        std::string_view tok = next(offset);
        long v = 0;
        if (tok.empty())
            throw FormatError("empty token at byte " + std::to_string(offset));
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw FormatError("non-numeric token '" + std::string(tok) + "' at byte " +
                                  std::to_string(offset));
            v = v * 10 + (c - '0');
            if (v > 1'000'000'000)
                throw FormatError("numeric token too large at byte " + std::to_string(offset));
        }
        return v;
    }
};

} // namespace

std::string serialize(const TruthTable& f) {
    std::ostringstream os;
    os << kMagic << ' ' << kVersion << '\n' << f.order() << ' ' << f.arity() << '\n';
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i)
            os << ' ';
        os << int{f.at(i)};
    }
    os << '\n';
    return os.str();
}

TruthTable parse(std::string_view text) {
    Tokenizer tk{text};
    std::size_t off = 0;
    std::string_view magic = tk.next(off);
    if (magic != kMagic)
        throw FormatError("bad magic '" + std::string(magic) + "' at byte " +
                          std::to_string(off));
    long version = tk.next_int(off);
    if (version != kVersion)
        throw FormatError("unsupported version " + std::to_string(version) + " at byte " +
                          std::to_string(off));
    long k = tk.next_int(off);
    long n = tk.next_int(off);
    if (k < 2 || k > kMaxOrder)
        throw FormatError("order " + std::to_string(k) + " out of range at byte " +
                          std::to_string(off));
    if (n < 1)
        throw FormatError("arity " + std::to_string(n) + " out of range at byte " +
                          std::to_string(off));
    std::size_t cells = num_cells(static_cast<int>(k), static_cast<int>(n));
    std::vector<Value> values;
    values.reserve(cells);
    while (!tk.at_end()) {
        long v = tk.next_int(off);
        if (values.size() == cells)
            throw LengthError("expected " + std::to_string(cells) +
                              " values, found extra data at byte " + std::to_string(off));
        if (v >= k)
            throw DomainError("value " + std::to_string(v) + " out of E_" +
                              std::to_string(k) + " at byte " + std::to_string(off));
        values.push_back(static_cast<Value>(v));
    }
    if (values.size() != cells)
        throw LengthError("expected " + std::to_string(cells) + " values, got " +
                          std::to_string(values.size()));
    return TruthTable(static_cast<int>(k), static_cast<int>(n), std::move(values));
}

TruthTable load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void save_file(const TruthTable& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw FormatError("cannot write '" + path + "'");
    out << serialize(f);
}

} // namespace kvl
