#include <algorithm>

#include "ppgk/error.hpp"
#include "ppgk/ingest.hpp"

namespace ppgk {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

IngestReport parse_fixture(ByteSource &src, const RecordSink &sink) {
    IngestReport report;
    std::string pending;
    std::uint64_t line_offset = 0;
    char buf[1 << 14];

    auto handle_line = [&](std::string_view line) {
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (trim(line).empty() || line.front() == '#')
            return;
        auto t1 = line.find('\t');
        auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos)
            throw ParseError("fixture line does not have three tab-separated fields",
                             line_offset);
        ++report.elements;
        auto date = Date::parse(trim(line.substr(0, t1)));
        std::vector<std::string> authors;
        std::string_view rest = line.substr(t1 + 1, t2 - t1 - 1);
        while (true) {
            auto semi = rest.find(';');
            auto name = trim(rest.substr(0, semi));
            if (!name.empty() && std::find(authors.begin(), authors.end(), name) == authors.end())
                authors.emplace_back(name);
            if (semi == std::string_view::npos)
                break;
            rest.remove_prefix(semi + 1);
        }
        if (!date || authors.empty()) {
            ++report.skipped;
            return;
        }
        ++report.emitted;
        sink(PaperRecord{std::move(authors), *date, tokenize_title(line.substr(t2 + 1))});
    };

    for (;;) {
        std::size_t n = src.read(buf, sizeof buf);
        report.bytes += n;
        if (n == 0)
            break;
        pending.append(buf, n);
        std::size_t start = 0;
        for (std::size_t nl; (nl = pending.find('\n', start)) != std::string::npos; start = nl + 1) {
            handle_line(std::string_view(pending).substr(start, nl - start));
            line_offset += nl - start + 1;
        }
        pending.erase(0, start);
    }
    if (!pending.empty())
        handle_line(pending);
    return report;
}

IngestReport read_records(const std::string &path, InputFormat format,
                          std::vector<PaperRecord> &out) {
    auto src = open_file_source(path);
    RecordSink sink = [&](PaperRecord &&r) { out.push_back(std::move(r)); };
    return format == InputFormat::dblp_xml ? parse_dblp_xml(*src, sink) : parse_fixture(*src, sink);
}

} // namespace ppgk
