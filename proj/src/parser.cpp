#include "ontoalign/parser.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <sstream>

#include <zlib.h>

namespace ontoalign {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r'; }

void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && is_ws(s[pos])) ++pos;
}

bool decode_hex4(const std::string& s, std::size_t pos, unsigned& out) {
    if (pos + 4 > s.size()) return false;
    out = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        char c = s[pos + i];
        out <<= 4;
        if (c >= '0' && c <= '9') out |= static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') out |= static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') out |= static_cast<unsigned>(c - 'A' + 10);
        else return false;
    }
    return true;
}

void append_utf8(std::string& out, unsigned cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else {
        out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    }
}

// Parses `<...>` returning the text between the brackets.
std::string parse_iri(const std::string& s, std::size_t& pos, std::size_t line) {
    if (pos >= s.size() || s[pos] != '<') throw ParseError(line, "expected '<'");
    std::size_t end = s.find('>', pos + 1);
    if (end == std::string::npos) throw ParseError(line, "unterminated IRI");
    std::string iri = s.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (iri.empty()) throw ParseError(line, "empty IRI");
    return iri;
}

// Parses a `_:name` blank-node label, treated as an ordinary resource.
std::string parse_blank(const std::string& s, std::size_t& pos, std::size_t line) {
    std::size_t start = pos;
    pos += 2;
    while (pos < s.size() && !is_ws(s[pos])) ++pos;
    if (pos == start + 2) throw ParseError(line, "empty blank node label");
    return s.substr(start, pos - start);
}

// Parses a quoted literal with optional ^^<datatype> or @lang tag.
RawTerm parse_literal(const std::string& s, std::size_t& pos, std::size_t line) {
    RawTerm term;
    term.is_literal = true;
    ++pos;  // opening quote
    std::string value;
    bool closed = false;
    while (pos < s.size()) {
        char c = s[pos];
        if (c == '\\') {
            if (pos + 1 >= s.size()) throw ParseError(line, "dangling escape");
            char e = s[pos + 1];
            pos += 2;
            switch (e) {
                case 't': value.push_back('\t'); break;
                case 'n': value.push_back('\n'); break;
                case 'r': value.push_back('\r'); break;
                case '"': value.push_back('"'); break;
                case '\\': value.push_back('\\'); break;
                case 'u': {
                    unsigned cp = 0;
                    if (!decode_hex4(s, pos, cp)) throw ParseError(line, "bad \\u escape");
                    pos += 4;
                    append_utf8(value, cp);
                    break;
                }
                default:
                    throw ParseError(line, std::string("unsupported escape \\") + e);
            }
        } else if (c == '"') {
            ++pos;
            closed = true;
            break;
        } else {
            value.push_back(c);
            ++pos;
        }
    }
    if (!closed) throw ParseError(line, "unterminated literal");
    term.lexical = std::move(value);
    if (pos + 1 < s.size() && s[pos] == '^' && s[pos + 1] == '^') {
        pos += 2;
        term.tag = parse_iri(s, pos, line);
    } else if (pos < s.size() && s[pos] == '@') {
        std::size_t start = pos;
        ++pos;
        while (pos < s.size() && !is_ws(s[pos]) && s[pos] != '.') ++pos;
        if (pos == start + 1) throw ParseError(line, "empty language tag");
        term.tag = s.substr(start, pos - start);
    }
    return term;
}

bool parse_ntriples_line(const std::string& s, std::size_t line, RawTriple& out) {
    std::size_t pos = 0;
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] == '#') return false;

    if (s[pos] == '<') {
        out.subject = parse_iri(s, pos, line);
    } else if (s.compare(pos, 2, "_:") == 0) {
        out.subject = parse_blank(s, pos, line);
    } else {
        throw ParseError(line, "expected subject IRI or blank node");
    }

    skip_ws(s, pos);
    out.relation = parse_iri(s, pos, line);

    skip_ws(s, pos);
    if (pos >= s.size()) throw ParseError(line, "missing object");
    if (s[pos] == '<') {
        out.object = RawTerm{parse_iri(s, pos, line), false, ""};
    } else if (s[pos] == '"') {
        out.object = parse_literal(s, pos, line);
    } else if (s.compare(pos, 2, "_:") == 0) {
        out.object = RawTerm{parse_blank(s, pos, line), false, ""};
    } else {
        throw ParseError(line, "expected object IRI, blank node, or literal");
    }

    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != '.') throw ParseError(line, "missing terminating '.'");
    ++pos;
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] != '#') throw ParseError(line, "trailing content after '.'");
    out.line = line;
    return true;
}

bool parse_tsv_line(const std::string& s, std::size_t line, RawTriple& out) {
    if (s.empty() || s[0] == '#') return false;
    std::size_t t1 = s.find('\t');
    if (t1 == std::string::npos) throw ParseError(line, "expected 3 tab-separated columns");
    std::size_t t2 = s.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw ParseError(line, "expected 3 tab-separated columns");
    if (s.find('\t', t2 + 1) != std::string::npos) {
        throw ParseError(line, "expected 3 tab-separated columns");
    }

    out.subject = s.substr(0, t1);
    out.relation = s.substr(t1 + 1, t2 - t1 - 1);
    std::string obj = s.substr(t2 + 1);
    while (!obj.empty() && (obj.back() == '\r' || obj.back() == '\n')) obj.pop_back();

    if (out.subject.empty() || out.relation.empty() || obj.empty()) {
        throw ParseError(line, "empty column");
    }

    if (obj[0] == '"') {
        std::size_t pos = 0;
        out.object = parse_literal(obj, pos, line);
        if (pos < obj.size()) throw ParseError(line, "trailing content after literal");
    } else {
        out.object = RawTerm{std::move(obj), false, ""};
    }
    out.line = line;
    return true;
}

template <typename LineParser>
ParseStats parse_lines(std::istream& in, const TripleSink& sink, const ParseOptions& options,
                       LineParser parse_line) {
    ParseStats stats;
    std::string line_text;
    std::size_t line_number = 0;
    while (std::getline(in, line_text)) {
        ++line_number;
        if (!line_text.empty() && line_text.back() == '\r') line_text.pop_back();
        RawTriple triple;
        try {
            if (!parse_line(line_text, line_number, triple)) continue;
        } catch (const ParseError&) {
            if (options.skip_malformed) {
                ++stats.skipped;
                continue;
            }
            throw;
        }
        ++stats.triples;
        sink(std::move(triple));
    }
    return stats;
}

// streambuf over a gzip file; also serves plain files for uniformity.
class GzStreambuf : public std::streambuf {
public:
    explicit GzStreambuf(const std::string& path) {
        file_ = gzopen(path.c_str(), "rb");
        if (file_ == nullptr) throw std::runtime_error("cannot open " + path);
    }

    ~GzStreambuf() override {
        if (file_ != nullptr) gzclose(file_);
    }

protected:
    int_type underflow() override {
        if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
        int n = gzread(file_, buffer_.data(), static_cast<unsigned>(buffer_.size()));
        if (n <= 0) return traits_type::eof();
        setg(buffer_.data(), buffer_.data(), buffer_.data() + n);
        return traits_type::to_int_type(*gptr());
    }

private:
    gzFile file_ = nullptr;
    std::array<char, 1 << 16> buffer_{};
};

class GzInputStream : public std::istream {
public:
    explicit GzInputStream(const std::string& path) : std::istream(nullptr), buf_(path) {
        rdbuf(&buf_);
    }

private:
    GzStreambuf buf_;
};

}  // namespace

ParseStats parse_ntriples(std::istream& in, const TripleSink& sink, const ParseOptions& options) {
    return parse_lines(in, sink, options, parse_ntriples_line);
}

ParseStats parse_tsv(std::istream& in, const TripleSink& sink, const ParseOptions& options) {
    return parse_lines(in, sink, options, parse_tsv_line);
}

std::vector<RawTriple> parse_ntriples(std::istream& in, const ParseOptions& options) {
    std::vector<RawTriple> triples;
    parse_ntriples(in, [&](RawTriple&& t) { triples.push_back(std::move(t)); }, options);
    return triples;
}

std::vector<RawTriple> parse_tsv(std::istream& in, const ParseOptions& options) {
    std::vector<RawTriple> triples;
    parse_tsv(in, [&](RawTriple&& t) { triples.push_back(std::move(t)); }, options);
    return triples;
}

TripleFormat detect_format(const std::string& path) {
    std::string name = path;
    if (name.size() > 3 && name.compare(name.size() - 3, 3, ".gz") == 0) {
        name = name.substr(0, name.size() - 3);
    }
    if (name.size() > 4 && name.compare(name.size() - 4, 4, ".tsv") == 0) {
        return TripleFormat::Tsv;
    }
    return TripleFormat::NTriples;
}

ParseStats parse_file(std::istream& in, TripleFormat format, const TripleSink& sink,
                      const ParseOptions& options) {
    return format == TripleFormat::Tsv ? parse_tsv(in, sink, options)
                                       : parse_ntriples(in, sink, options);
}

std::unique_ptr<std::istream> open_text_input(const std::string& path) {
    // gzopen reads plain files as-is, so a single code path covers both.
    auto stream = std::make_unique<GzInputStream>(path);
    if (stream->peek() == std::char_traits<char>::eof()) {
        // Distinguish empty/missing: gzopen already failed for missing files.
        stream->clear();
    }
    return stream;
}

std::string escape_ntriples_literal(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace ontoalign
