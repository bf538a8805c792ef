#pragma once

// Line-oriented readers for the two supported triple formats: an
// N-Triples subset and 3-column TSV. Both produce the same raw-triple
// stream that OntologyBuilder consumes.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ontoalign {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}

    std::size_t line;
};

// Object position of a raw triple: a resource identifier or a literal
// with its original lexical form and optional datatype/language tag.
struct RawTerm {
    std::string lexical;
    bool is_literal = false;
    std::string tag;  // "@lang" or datatype IRI text; empty when untagged
};

struct RawTriple {
    std::string subject;
    std::string relation;
    RawTerm object;
    std::size_t line = 0;
};

struct ParseOptions {
    // When true, malformed lines are counted and skipped instead of
    // aborting the parse.
    bool skip_malformed = false;
};

struct ParseStats {
    std::size_t triples = 0;
    std::size_t skipped = 0;
};

using TripleSink = std::function<void(RawTriple&&)>;

ParseStats parse_ntriples(std::istream& in, const TripleSink& sink, const ParseOptions& options = {});
ParseStats parse_tsv(std::istream& in, const TripleSink& sink, const ParseOptions& options = {});

std::vector<RawTriple> parse_ntriples(std::istream& in, const ParseOptions& options = {});
std::vector<RawTriple> parse_tsv(std::istream& in, const ParseOptions& options = {});

enum class TripleFormat { NTriples, Tsv };

// Picks the format from a file name: .tsv for TSV, anything else
// N-Triples. A trailing .gz is ignored for the purpose of detection.
TripleFormat detect_format(const std::string& path);

ParseStats parse_file(std::istream& in, TripleFormat format, const TripleSink& sink,
                      const ParseOptions& options = {});

// Opens a text input, transparently decompressing gzip (detected by
// magic bytes). Throws std::runtime_error when the file cannot be read.
std::unique_ptr<std::istream> open_text_input(const std::string& path);

// Escapes a literal lexical form for N-Triples output.
std::string escape_ntriples_literal(const std::string& raw);

}  // namespace ontoalign
