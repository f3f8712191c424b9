#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppgk/date.hpp"

namespace ppgk {

/// One publication: the ingestion unit.
struct PaperRecord {
    std::vector<std::string> authors; // nonempty, deduplicated, first-occurrence order
    Date date;
    std::vector<std::string> title_tokens;

    friend bool operator==(const PaperRecord &, const PaperRecord &) = default;
};

/// Version of the bundled stopword list. Attribute outputs depend on it.
inline constexpr int kStopwordListVersion = 1;

std::span<const std::string_view> stopwords();
bool is_stopword(std::string_view token);

/// Lowercases ASCII, splits on runs of characters that are neither ASCII
/// alphanumerics nor part of a multi-byte UTF-8 sequence, drops tokens shorter
/// than three code points and stopwords, and keeps each token once, in order
/// of first occurrence.
std::vector<std::string> tokenize_title(std::string_view title);

/// Pull-style byte source. read() returns 0 at end of stream.
class ByteSource {
public:
    virtual ~ByteSource() = default;
    virtual std::size_t read(char *buf, std::size_t len) = 0;
};

/// Opens a file; gzip input is decompressed transparently. Throws io.
std::unique_ptr<ByteSource> open_file_source(const std::string &path);
std::unique_ptr<ByteSource> make_string_source(std::string data);

struct IngestReport {
    std::uint64_t elements = 0; // publication elements (or fixture lines) seen
    std::uint64_t emitted = 0;
    std::uint64_t skipped = 0;
    std::uint64_t bytes = 0;
};

using RecordSink = std::function<void(PaperRecord &&)>;

/// Streams DBLP XML. Publication elements are article, inproceedings,
/// proceedings, book, incollection, phdthesis and mastersthesis; each one with
/// at least one author and a parsable year becomes a record, the rest are
/// counted as skipped. The date is year-MM-01 where MM comes from a
/// recognizable month element, else 01. Undeclared named entities (DBLP
/// declares its Latin-1 entities in an external DTD) are resolved from a
/// built-in table. Throws ParseError on malformed XML.
IngestReport parse_dblp_xml(ByteSource &src, const RecordSink &sink);

/// Line format `date<TAB>author;author;...<TAB>title`, date as YYYY,
/// YYYY-MM or YYYY-MM-DD. Blank lines and lines starting with '#' are
/// ignored. Lines with an unparsable date or no authors are skipped; lines
/// without exactly three fields raise ParseError.
IngestReport parse_fixture(ByteSource &src, const RecordSink &sink);

enum class InputFormat { dblp_xml, fixture };

IngestReport read_records(const std::string &path, InputFormat format,
                          std::vector<PaperRecord> &out);

} // namespace ppgk
