#include "crossint/fam_io.hpp"

#include <fstream>
#include <sstream>

namespace crossint {

namespace {

void append_members(std::string& out, const Family& f, char prefix) {
    for (const auto& m : f.members()) {
        out += prefix;
        out += ": ";
        if (m.empty()) {
            out += '-';
        } else {
            bool first = true;
            for (int e : m.elements()) {
                if (!first) out += ',';
                out += std::to_string(e);
                first = false;
            }
        }
        out += '\n';
    }
}

struct LineReader {
    std::istringstream in;
    int lineno = 0;
    explicit LineReader(const std::string& text) : in(text) {}

    bool next(std::string& line) {
        if (!std::getline(in, line)) return false;
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            throw FamFormatError("fam: CR line ending at line " + std::to_string(lineno));
        if (!line.empty() && (line.back() == ' ' || line.back() == '\t'))
            throw FamFormatError("fam: trailing whitespace at line " + std::to_string(lineno));
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw FamFormatError("fam: " + msg + " at line " + std::to_string(lineno));
    }
};

int parse_int(LineReader& r, const std::string& s) {
    if (s.empty()) r.fail("expected integer");
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        r.fail("bad integer '" + s + "'");
    }
    if (pos != s.size()) r.fail("bad integer '" + s + "'");
    return v;
}

SubsetMask parse_member(LineReader& r, const std::string& body, int n) {
    if (body == "-") return SubsetMask();
    SubsetMask m;
    int prev = 0;
    size_t i = 0;
    while (i < body.size()) {
        size_t j = body.find(',', i);
        if (j == std::string::npos) j = body.size();
        int e = parse_int(r, body.substr(i, j - i));
        if (e < 1 || e > n) r.fail("element out of range");
        if (e <= prev) r.fail("elements not strictly ascending");
        m = m.with(e);
        prev = e;
        i = j + 1;
    }
    if (m.empty()) r.fail("empty member list (use '-')");
    return m;
}

int parse_header(LineReader& r) {
    std::string line;
    if (!r.next(line)) r.fail("missing header");
    if (line.rfind("n ", 0) != 0) r.fail("expected 'n <int>' header");
    int n = parse_int(r, line.substr(2));
    if (n < 1 || n > kMaxGroundSet) r.fail("n out of range");
    return n;
}

// Reads prefixed member lines until a line that is not one; that line (or
// EOF) is handed back through `stop`.
std::vector<SubsetMask> parse_block(LineReader& r, char prefix, int n, std::string& stop, bool& eof) {
    std::vector<SubsetMask> ms;
    const std::string want = std::string(1, prefix) + ": ";
    std::string line;
    eof = true;
    while (r.next(line)) {
        if (line.rfind(want, 0) != 0) {
            stop = line;
            eof = false;
            break;
        }
        SubsetMask m = parse_member(r, line.substr(3), n);
        if (!ms.empty() && !(ms.back() < m)) r.fail("members not in ascending mask order");
        ms.push_back(m);
    }
    return ms;
}

}  // namespace

std::string encode_family(const Family& f) {
    std::string out = "n " + std::to_string(f.n()) + "\n";
    append_members(out, f, 'A');
    return out;
}

std::string encode_pair(const CrossPair& p) {
    std::string out = "n " + std::to_string(p.n) + "\n";
    append_members(out, p.a, 'A');
    out += "%%\n";
    append_members(out, p.b, 'B');
    out += "ell " + std::to_string(p.ell) + "\n";
    return out;
}

Family decode_family(const std::string& text) {
    LineReader r(text);
    int n = parse_header(r);
    std::string stop;
    bool eof = false;
    auto ms = parse_block(r, 'A', n, stop, eof);
    if (!eof) r.fail("unexpected line '" + stop + "'");
    return Family(n, std::move(ms));
}

CrossPair decode_pair(const std::string& text) {
    LineReader r(text);
    int n = parse_header(r);
    std::string stop;
    bool eof = false;
    auto as = parse_block(r, 'A', n, stop, eof);
    if (eof || stop != "%%") r.fail("expected '%%' separator");
    auto bs = parse_block(r, 'B', n, stop, eof);
    if (eof || stop.rfind("ell ", 0) != 0) r.fail("expected 'ell <int>' trailer");
    int ell = parse_int(r, stop.substr(4));
    if (ell < 0) r.fail("negative ell");
    std::string extra;
    if (r.next(extra)) r.fail("trailing content after 'ell'");
    return CrossPair(Family(n, std::move(as)), Family(n, std::move(bs)), ell);
}

Family read_family_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FamFormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return decode_family(ss.str());
}

CrossPair read_pair_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FamFormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return decode_pair(ss.str());
}

void write_pair_file(const std::string& path, const CrossPair& p) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FamFormatError("cannot open " + path + " for writing");
    out << encode_pair(p);
    if (!out) throw FamFormatError("write failed: " + path);
}

}  // namespace crossint
