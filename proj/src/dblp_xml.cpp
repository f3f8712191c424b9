#include <algorithm>
#include <cstring>
#include <string>
#include <string_view>

#include <expat.h>

#include "ppgk/error.hpp"
#include "ppgk/ingest.hpp"

namespace ppgk {

namespace {

constexpr std::string_view kPublicationElements[] = {
    "article", "book", "incollection", "inproceedings", "mastersthesis", "phdthesis",
    "proceedings",
};

// ISO 8859-1 character entities, code points 160..255 in order. dblp.dtd
// declares these; they are supplied here so no DTD file is needed.
constexpr const char *kLatin1Entities[] = {
    "nbsp",   "iexcl",  "cent",   "pound",  "curren", "yen",    "brvbar", "sect",
    "uml",    "copy",   "ordf",   "laquo",  "not",    "shy",    "reg",    "macr",
    "deg",    "plusmn", "sup2",   "sup3",   "acute",  "micro",  "para",   "middot",
    "cedil",  "sup1",   "ordm",   "raquo",  "frac14", "frac12", "frac34", "iquest",
    "Agrave", "Aacute", "Acirc",  "Atilde", "Auml",   "Aring",  "AElig",  "Ccedil",
    "Egrave", "Eacute", "Ecirc",  "Euml",   "Igrave", "Iacute", "Icirc",  "Iuml",
    "ETH",    "Ntilde", "Ograve", "Oacute", "Ocirc",  "Otilde", "Ouml",   "times",
    "Oslash", "Ugrave", "Uacute", "Ucirc",  "Uuml",   "Yacute", "THORN",  "szlig",
    "agrave", "aacute", "acirc",  "atilde", "auml",   "aring",  "aelig",  "ccedil",
    "egrave", "eacute", "ecirc",  "euml",   "igrave", "iacute", "icirc",  "iuml",
    "eth",    "ntilde", "ograve", "oacute", "ocirc",  "otilde", "ouml",   "divide",
    "oslash", "ugrave", "uacute", "ucirc",  "uuml",   "yacute", "thorn",  "yuml",
};

const std::string &entity_dtd() {
    static const std::string dtd = [] {
        std::string s;
        for (int i = 0; i < 96; ++i)
            s += "<!ENTITY " + std::string(kLatin1Entities[i]) + " \"&#" + std::to_string(160 + i) +
                 ";\">\n";
        return s;
    }();
    return dtd;
}

bool is_publication(std::string_view name) {
    return std::find(std::begin(kPublicationElements), std::end(kPublicationElements), name) !=
           std::end(kPublicationElements);
}

// Collapses whitespace runs to one space and trims.
std::string squeeze(std::string_view s) {
    std::string out;
    bool pending = false;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
            pending = !out.empty();
            continue;
        }
        if (pending)
            out += ' ';
        pending = false;
        out += c;
    }
    return out;
}

std::optional<int> parse_year(std::string_view s) {
    auto d = Date::parse(squeeze(s));
    if (!d || squeeze(s).size() != 4)
        return std::nullopt;
    return d->year();
}

unsigned parse_month(std::string_view raw) {
    std::string s = squeeze(raw);
    if (s.empty())
        return 1;
    if (std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        unsigned m = s.size() <= 2 ? unsigned(std::stoul(s)) : 0;
        return (m >= 1 && m <= 12) ? m : 1;
    }
    static constexpr std::string_view names[] = {"jan", "feb", "mar", "apr", "may", "jun",
                                                 "jul", "aug", "sep", "oct", "nov", "dec"};
    std::string head;
    for (char c : s.substr(0, 3))
        head += char(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    for (unsigned i = 0; i < 12; ++i)
        if (head == names[i])
            return i + 1;
    return 1;
}

enum class Field { none, author, title, year, month };

struct XmlState {
    XML_Parser parser = nullptr;
    const RecordSink *sink = nullptr;
    IngestReport report;

    bool in_record = false;
    int depth = 0;
    int record_depth = 0;
    Field field = Field::none;
    int field_depth = 0;
    std::string text;

    std::vector<std::string> authors;
    std::string title;
    std::string year;
    std::string month;

    void reset_record() {
        authors.clear();
        title.clear();
        year.clear();
        month.clear();
    }

    void finish_record() {
        ++report.elements;
        std::vector<std::string> unique;
        for (auto &a : authors)
            if (!a.empty() && std::find(unique.begin(), unique.end(), a) == unique.end())
                unique.push_back(std::move(a));
        auto y = parse_year(year);
        if (unique.empty() || !y) {
            ++report.skipped;
            return;
        }
        PaperRecord rec{std::move(unique), Date(*y, parse_month(month), 1),
                        tokenize_title(title)};
        ++report.emitted;
        (*sink)(std::move(rec));
    }
};

void XMLCALL on_start(void *data, const XML_Char *name, const XML_Char **) {
    auto &st = *static_cast<XmlState *>(data);
    ++st.depth;
    std::string_view tag(name);
    if (!st.in_record) {
        if (is_publication(tag)) {
            st.in_record = true;
            st.record_depth = st.depth;
            st.reset_record();
        }
        return;
    }
    if (st.field != Field::none || st.depth != st.record_depth + 1)
        return;
    if (tag == "author")
        st.field = Field::author;
    else if (tag == "title")
        st.field = Field::title;
    else if (tag == "year")
        st.field = Field::year;
    else if (tag == "month")
        st.field = Field::month;
    else
        return;
    st.field_depth = st.depth;
    st.text.clear();
}

void XMLCALL on_end(void *data, const XML_Char *) {
    auto &st = *static_cast<XmlState *>(data);
    if (st.in_record && st.field != Field::none && st.depth == st.field_depth) {
        switch (st.field) {
        case Field::author: st.authors.push_back(squeeze(st.text)); break;
        case Field::title: st.title = st.text; break;
        case Field::year: st.year = st.text; break;
        case Field::month: st.month = st.text; break;
        case Field::none: break;
        }
        st.field = Field::none;
    } else if (st.in_record && st.depth == st.record_depth) {
        st.in_record = false;
        st.finish_record();
    }
    --st.depth;
}

void XMLCALL on_text(void *data, const XML_Char *s, int len) {
    auto &st = *static_cast<XmlState *>(data);
    if (st.field != Field::none)
        st.text.append(s, std::size_t(len));
}

// Any external subset (dblp.dtd or the foreign DTD) is replaced by the entity
// declarations above.
int XMLCALL on_external_entity(XML_Parser parser, const XML_Char *context, const XML_Char *,
                               const XML_Char *, const XML_Char *) {
    XML_Parser ext = XML_ExternalEntityParserCreate(parser, context, nullptr);
    if (!ext)
        return XML_STATUS_ERROR;
    const std::string &dtd = entity_dtd();
    auto status = XML_Parse(ext, dtd.data(), int(dtd.size()), XML_TRUE);
    XML_ParserFree(ext);
    return status == XML_STATUS_ERROR ? XML_STATUS_ERROR : XML_STATUS_OK;
}

} // namespace

IngestReport parse_dblp_xml(ByteSource &src, const RecordSink &sink) {
    XML_Parser parser = XML_ParserCreate(nullptr);
    if (!parser)
        throw Error(Errc::io, "cannot create XML parser");
    struct Free {
        XML_Parser p;
        ~Free() { XML_ParserFree(p); }
    } guard{parser};

    XmlState st;
    st.parser = parser;
    st.sink = &sink;
    XML_SetUserData(parser, &st);
    XML_SetElementHandler(parser, on_start, on_end);
    XML_SetCharacterDataHandler(parser, on_text);
    XML_SetParamEntityParsing(parser, XML_PARAM_ENTITY_PARSING_ALWAYS);
    XML_SetExternalEntityRefHandler(parser, on_external_entity);
    XML_UseForeignDTD(parser, XML_TRUE);

    constexpr std::size_t kChunk = 1 << 16;
    for (;;) {
        void *buf = XML_GetBuffer(parser, int(kChunk));
        if (!buf)
            throw Error(Errc::io, "out of memory while parsing XML");
        std::size_t n = src.read(static_cast<char *>(buf), kChunk);
        st.report.bytes += n;
        if (XML_ParseBuffer(parser, int(n), n == 0) == XML_STATUS_ERROR) {
            auto offset = XML_GetCurrentByteIndex(parser);
            throw ParseError(std::string("malformed XML: ") + XML_ErrorString(XML_GetErrorCode(parser)),
                             std::uint64_t(offset < 0 ? 0 : offset));
        }
        if (n == 0)
            break;
    }
    return st.report;
}

} // namespace ppgk
