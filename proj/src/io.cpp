#include "ppgk/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>
#include <unistd.h>

#include <zlib.h>

#include "ppgk/error.hpp"

namespace fs = std::filesystem;

namespace ppgk {

static_assert(std::endian::native == std::endian::little,
              "binary artifacts are written in host order and assume little endian");

namespace {

constexpr char kManifest[] = "manifest.tsv";

std::uint32_t crc(std::string_view data, std::uint32_t seed = 0) {
    uLong c = seed;
    while (!data.empty()) {
        auto chunk = std::min<std::size_t>(data.size(), 1u << 30);
        c = crc32(c, reinterpret_cast<const Bytef *>(data.data()), uInt(chunk));
        data.remove_prefix(chunk);
    }
    return std::uint32_t(c);
}

std::string hex32(std::uint32_t v) {
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", v);
    return buf;
}

void append_uint(std::string &out, std::uint64_t v) {
    char buf[24];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, p);
}

// Splits a TSV body into rows of fields; `file` and row numbers go into
// error messages.
class RowReader {
public:
    RowReader(const std::string &file, std::string_view body) : file_(file), body_(body) {}

    bool next(std::vector<std::string_view> &fields) {
        if (pos_ >= body_.size())
            return false;
        auto nl = body_.find('\n', pos_);
        if (nl == std::string_view::npos)
            throw ParseError(file_ + ": last row lacks a line feed", pos_);
        std::string_view line = body_.substr(pos_, nl - pos_);
        row_start_ = pos_;
        pos_ = nl + 1;
        fields.clear();
        std::size_t start = 0;
        for (;;) {
            auto tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
            if (tab == std::string_view::npos)
                break;
            start = tab + 1;
        }
        return true;
    }

    [[noreturn]] void fail(const std::string &why) const {
        throw ParseError(file_ + ": " + why, row_start_);
    }

    std::uint32_t id(std::string_view s) const {
        std::uint32_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || p != s.data() + s.size() ||
            (s.size() > 1 && s[0] == '0'))
            fail("bad vertex id '" + std::string(s) + "'");
        return v;
    }

private:
    std::string file_;
    std::string_view body_;
    std::size_t pos_ = 0;
    std::size_t row_start_ = 0;
};

const std::string &file_at(const FileSet &files, const std::string &name) {
    auto it = files.find(name);
    if (it == files.end())
        throw Error(Errc::io, "graph file set lacks " + name);
    return it->second;
}

void write_file(const fs::path &path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(Errc::io, "cannot create " + path.string());
    out.write(data.data(), std::streamsize(data.size()));
    out.close();
    if (!out)
        throw Error(Errc::io, "cannot write " + path.string());
}

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw Error(Errc::io, "cannot read " + path.string());
    return std::move(ss).str();
}

fs::path unique_sibling(const fs::path &dir, const char *tag) {
    static int counter = 0;
    fs::path parent = dir.has_parent_path() ? dir.parent_path() : fs::path(".");
    return parent / ("." + dir.filename().string() + "." + tag + "-" + std::to_string(::getpid()) +
                     "-" + std::to_string(counter++));
}

// Binary helpers

class BinWriter {
public:
    template <class T> void put(const T &v) {
        static_assert(std::is_trivially_copyable_v<T>);
        buf_.append(reinterpret_cast<const char *>(&v), sizeof v);
    }
    const std::string &data() const { return buf_; }

private:
    std::string buf_;
};

class BinReader {
public:
    BinReader(std::string data, std::string file) : data_(std::move(data)), file_(std::move(file)) {}

    template <class T> T get() {
        T v;
        need(sizeof v);
        std::memcpy(&v, data_.data() + pos_, sizeof v);
        pos_ += sizeof v;
        return v;
    }
    template <class T> std::vector<T> get_vector(std::uint64_t count) {
        if (count > (data_.size() - pos_) / sizeof(T))
            throw ParseError(file_ + ": truncated array", pos_);
        std::vector<T> v(count);
        std::memcpy(v.data(), data_.data() + pos_, count * sizeof(T));
        pos_ += count * sizeof(T);
        return v;
    }
    void expect_end() const {
        if (pos_ != data_.size())
            throw ParseError(file_ + ": trailing bytes", pos_);
    }
    std::size_t pos() const { return pos_; }

private:
    void need(std::size_t n) const {
        if (data_.size() - pos_ < n)
            throw ParseError(file_ + ": truncated file", pos_);
    }

    std::string data_;
    std::string file_;
    std::size_t pos_ = 0;
};

constexpr char kSketchMagic[8] = {'P', 'P', 'G', 'K', 'S', 'K', 'T', '1'};
constexpr char kStoreMagic[8] = {'P', 'P', 'G', 'K', 'P', 'P', 'R', '1'};
constexpr std::uint32_t kArtifactVersion = 1;

BinReader open_artifact(const fs::path &file, const char (&magic)[8],
                        std::uint32_t expected_checksum) {
    std::error_code ec;
    if (!fs::exists(file, ec))
        throw Error(Errc::missing_artifact, "artifact " + file.string() + " does not exist");
    BinReader in(read_file(file), file.string());
    auto m = in.get<std::array<char, 8>>();
    if (std::memcmp(m.data(), magic, 8) != 0)
        throw ParseError(file.string() + ": wrong file type", 0);
    if (in.get<std::uint32_t>() != kArtifactVersion)
        throw ParseError(file.string() + ": unsupported version", 8);
    auto checksum = in.get<std::uint32_t>();
    if (checksum != expected_checksum)
        throw Error(Errc::checksum_mismatch, file.string() + " was built for graph " +
                                                 hex32(checksum) + ", not " +
                                                 hex32(expected_checksum));
    return in;
}

void check_offsets(const std::vector<std::uint64_t> &offsets, std::uint64_t total,
                   const fs::path &file) {
    if (offsets.empty() || offsets.front() != 0 || offsets.back() != total ||
        !std::is_sorted(offsets.begin(), offsets.end()))
        throw ParseError(file.string() + ": inconsistent offsets", 0);
}

} // namespace

// Text file set

FileSet serialize(const PPGraph &g) {
    FileSet files;
    std::string &vertices = files["vertices.tsv"];
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const std::string &name = g.name(v);
        if (name.find_first_of("\t\n") != std::string::npos)
            throw Error(Errc::invalid_argument, "vertex name contains a tab or line feed");
        append_uint(vertices, v);
        vertices += '\t';
        vertices += name;
        vertices += '\n';
    }

    std::string &pub = files["public-edges.tsv"];
    for (const Edge &e : g.public_graph().edges()) {
        append_uint(pub, e.u);
        pub += '\t';
        append_uint(pub, e.v);
        pub += '\n';
    }

    std::string &priv = files["private-edges.tsv"];
    for (const PrivateGraph &pg : g.private_graphs())
        for (const Edge &e : pg.edges()) {
            append_uint(priv, pg.owner());
            priv += '\t';
            append_uint(priv, e.u);
            priv += '\t';
            append_uint(priv, e.v);
            priv += '\n';
        }

    std::string &pattrs = files["public-attrs.tsv"];
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (const std::string &w : g.attributes().public_attrs(v)) {
            append_uint(pattrs, v);
            pattrs += '\t';
            pattrs += w;
            pattrs += '\n';
        }

    std::string &qattrs = files["private-attrs.tsv"];
    for (const auto &[key, words] : g.attributes().private_entries())
        for (const std::string &w : words) {
            append_uint(qattrs, key.first);
            qattrs += '\t';
            append_uint(qattrs, key.second);
            qattrs += '\t';
            qattrs += w;
            qattrs += '\n';
        }

    std::string manifest = "format\tppgk-graph\nversion\t" + std::to_string(kFileSetVersion) +
                           "\ncutoff\t" + (g.cutoff() ? g.cutoff()->to_string() : "-") +
                           "\nvertices\t" + std::to_string(g.vertex_count()) +
                           "\npublic_edges\t" + std::to_string(g.public_graph().edge_count()) +
                           "\nprivate_vertices\t" + std::to_string(g.private_graphs().size()) +
                           "\nprivate_edges\t" + std::to_string(g.private_edge_count()) + "\n";
    for (const char *name : kFileSetFiles)
        manifest += std::string("crc32:") + name + "\t" + hex32(crc(files[name])) + "\n";
    manifest += "checksum\t" + hex32(graph_checksum(files)) + "\n";
    files[kManifest] = std::move(manifest);
    return files;
}

std::uint32_t graph_checksum(const FileSet &files) {
    std::uint32_t c = 0;
    for (const char *name : kFileSetFiles) {
        c = crc(std::string_view(name, std::strlen(name) + 1), c);
        c = crc(file_at(files, name), c);
    }
    return c;
}

std::uint32_t graph_checksum(const PPGraph &g) {
    FileSet files = serialize(g);
    return graph_checksum(files);
}

PPGraph deserialize(const FileSet &files) {
    std::map<std::string, std::string, std::less<>> manifest;
    {
        RowReader rows(kManifest, file_at(files, kManifest));
        std::vector<std::string_view> f;
        while (rows.next(f)) {
            if (f.size() != 2)
                rows.fail("manifest rows need two fields");
            manifest[std::string(f[0])] = std::string(f[1]);
        }
        if (manifest["format"] != "ppgk-graph")
            rows.fail("not a graph manifest");
        if (manifest["version"] != std::to_string(kFileSetVersion))
            rows.fail("unsupported file set version " + manifest["version"]);
    }
    for (const char *name : kFileSetFiles) {
        auto expected = manifest[std::string("crc32:") + name];
        if (hex32(crc(file_at(files, name))) != expected)
            throw Error(Errc::checksum_mismatch, std::string(name) + " does not match its manifest checksum");
    }
    if (hex32(graph_checksum(files)) != manifest["checksum"])
        throw Error(Errc::checksum_mismatch, "graph checksum does not match the manifest");

    std::optional<Date> cutoff;
    if (manifest["cutoff"] != "-") {
        cutoff = Date::parse(manifest["cutoff"]);
        if (!cutoff)
            throw ParseError("manifest: bad cutoff date", 0);
    }

    std::vector<std::string_view> f;
    std::vector<std::string> names;
    {
        RowReader rows("vertices.tsv", file_at(files, "vertices.tsv"));
        while (rows.next(f)) {
            if (f.size() != 2)
                rows.fail("expected id and name");
            if (rows.id(f[0]) != names.size())
                rows.fail("vertex ids must be 0..n-1 in order");
            names.emplace_back(f[1]);
        }
    }
    const std::size_t n = names.size();
    if (manifest["vertices"] != std::to_string(n))
        throw ParseError("manifest: vertex count disagrees with vertices.tsv", 0);

    std::vector<Edge> pub_edges;
    {
        RowReader rows("public-edges.tsv", file_at(files, "public-edges.tsv"));
        while (rows.next(f)) {
            if (f.size() != 2)
                rows.fail("expected two endpoints");
            Edge e;
            e.u = rows.id(f[0]);
            e.v = rows.id(f[1]);
            if (e.u >= e.v || e.v >= n)
                rows.fail("edge endpoints must satisfy u < v < n");
            if (!pub_edges.empty() && !(pub_edges.back() < e))
                rows.fail("rows out of order");
            pub_edges.push_back(e);
        }
    }

    std::vector<PrivateGraph> privates;
    {
        RowReader rows("private-edges.tsv", file_at(files, "private-edges.tsv"));
        std::vector<Edge> current;
        VertexId owner = 0;
        std::tuple<VertexId, VertexId, VertexId> last{};
        bool first = true;
        while (rows.next(f)) {
            if (f.size() != 3)
                rows.fail("expected owner and two endpoints");
            VertexId o = rows.id(f[0]);
            Edge e;
            e.u = rows.id(f[1]);
            e.v = rows.id(f[2]);
            if (o >= n || e.u >= e.v || e.v >= n)
                rows.fail("ids out of range or endpoints not ordered");
            std::tuple<VertexId, VertexId, VertexId> key{o, e.u, e.v};
            if (!first && !(last < key))
                rows.fail("rows out of order");
            if (!first && o != owner) {
                privates.emplace_back(owner, std::move(current));
                current.clear();
            }
            owner = o;
            last = key;
            first = false;
            current.push_back(e);
        }
        if (!first)
            privates.emplace_back(owner, std::move(current));
    }

    AttributeStore attrs(n);
    {
        RowReader rows("public-attrs.tsv", file_at(files, "public-attrs.tsv"));
        std::map<VertexId, std::vector<std::string>> sets;
        std::pair<VertexId, std::string_view> last{};
        bool first = true;
        while (rows.next(f)) {
            if (f.size() != 2 || f[1].empty())
                rows.fail("expected vertex and keyword");
            VertexId v = rows.id(f[0]);
            if (v >= n)
                rows.fail("vertex out of range");
            std::pair<VertexId, std::string_view> key{v, f[1]};
            if (!first && !(last < key))
                rows.fail("rows out of order");
            last = key;
            first = false;
            sets[v].emplace_back(f[1]);
        }
        for (auto &[v, words] : sets)
            attrs.set_public(v, std::move(words));
    }
    {
        RowReader rows("private-attrs.tsv", file_at(files, "private-attrs.tsv"));
        std::map<std::pair<VertexId, VertexId>, std::vector<std::string>> sets;
        std::tuple<VertexId, VertexId, std::string_view> last{};
        bool first = true;
        while (rows.next(f)) {
            if (f.size() != 3 || f[2].empty())
                rows.fail("expected owner, vertex and keyword");
            VertexId o = rows.id(f[0]), v = rows.id(f[1]);
            if (o >= n || v >= n)
                rows.fail("vertex out of range");
            std::tuple<VertexId, VertexId, std::string_view> key{o, v, f[2]};
            if (!first && !(last < key))
                rows.fail("rows out of order");
            last = key;
            first = false;
            sets[{o, v}].emplace_back(f[2]);
        }
        for (auto &[key, words] : sets)
            attrs.set_private(key.first, key.second, std::move(words));
    }

    return PPGraph(std::move(names), PublicGraph(n, std::move(pub_edges)), std::move(privates),
                   std::move(attrs), cutoff);
}

void save_graph(const PPGraph &g, const fs::path &dir) {
    FileSet files = serialize(g);
    std::error_code ec;
    const fs::path tmp = unique_sibling(dir, "tmp");
    if (!fs::create_directories(tmp, ec) || ec)
        throw Error(Errc::io, "cannot create " + tmp.string() + ": " + ec.message());
    try {
        for (const auto &[name, body] : files)
            write_file(tmp / name, body);
        fs::path old;
        if (fs::exists(dir, ec)) {
            old = unique_sibling(dir, "old");
            fs::rename(dir, old, ec);
            if (ec)
                throw Error(Errc::io, "cannot replace " + dir.string() + ": " + ec.message());
        }
        fs::rename(tmp, dir, ec);
        if (ec) {
            if (!old.empty())
                fs::rename(old, dir);
            throw Error(Errc::io, "cannot move graph into " + dir.string() + ": " + ec.message());
        }
        if (!old.empty())
            fs::remove_all(old, ec);
    } catch (...) {
        fs::remove_all(tmp, ec);
        throw;
    }
}

PPGraph load_graph(const fs::path &dir) {
    FileSet files;
    files[kManifest] = read_file(dir / kManifest);
    for (const char *name : kFileSetFiles)
        files[name] = read_file(dir / name);
    return deserialize(files);
}

// Binary artifacts

void save_sketches(const DistanceSketchSet &sk, std::uint32_t checksum, const fs::path &file) {
    BinWriter out;
    out.put(kSketchMagic);
    out.put(kArtifactVersion);
    out.put(checksum);
    out.put(sk.factor());
    out.put(sk.rng_seed());
    out.put(sk.repetitions());
    out.put(std::uint64_t(sk.vertex_count()));
    out.put(std::uint64_t(sk.total_entries()));
    for (std::size_t off : sk.raw_offsets())
        out.put(std::uint64_t(off));
    for (const SketchEntry &e : sk.raw_entries()) {
        out.put(e.seed);
        out.put(e.dist);
    }
    fs::path tmp = file;
    tmp += ".tmp";
    write_file(tmp, out.data());
    std::error_code ec;
    fs::rename(tmp, file, ec);
    if (ec)
        throw Error(Errc::io, "cannot write " + file.string() + ": " + ec.message());
}

DistanceSketchSet load_sketches(const fs::path &file, std::uint32_t expected_checksum) {
    BinReader in = open_artifact(file, kSketchMagic, expected_checksum);
    auto factor = in.get<double>();
    auto seed = in.get<std::uint64_t>();
    auto reps = in.get<std::uint32_t>();
    auto n = in.get<std::uint64_t>();
    auto total = in.get<std::uint64_t>();
    if (n == std::numeric_limits<std::uint64_t>::max())
        throw ParseError(file.string() + ": bad vertex count", in.pos());
    auto raw = in.get_vector<std::uint64_t>(n + 1);
    check_offsets(raw, total, file);
    auto entries = in.get_vector<SketchEntry>(total);
    in.expect_end();
    for (const SketchEntry &e : entries)
        if (e.seed >= n)
            throw ParseError(file.string() + ": sketch seed out of range", 0);
    if (!(factor > 0 && factor <= 1) || reps != sketch_repetitions(factor))
        throw ParseError(file.string() + ": inconsistent sketch parameters", 0);
    return DistanceSketchSet(factor, seed, reps, std::vector<std::size_t>(raw.begin(), raw.end()),
                             std::move(entries));
}

void save_ppr_store(const PublicPPRStore &store, std::uint32_t checksum, const fs::path &file) {
    BinWriter out;
    out.put(kStoreMagic);
    out.put(kArtifactVersion);
    out.put(checksum);
    out.put(store.alpha());
    out.put(store.eps());
    out.put(std::uint64_t(store.vertex_count()));
    out.put(std::uint64_t(store.total_entries()));
    for (std::size_t off : store.raw_offsets())
        out.put(std::uint64_t(off));
    for (const ScoreEntry &e : store.raw_entries()) {
        out.put(e.vertex);
        out.put(std::uint32_t(0));
        out.put(e.score);
    }
    fs::path tmp = file;
    tmp += ".tmp";
    write_file(tmp, out.data());
    std::error_code ec;
    fs::rename(tmp, file, ec);
    if (ec)
        throw Error(Errc::io, "cannot write " + file.string() + ": " + ec.message());
}

PublicPPRStore load_ppr_store(const fs::path &file, std::uint32_t expected_checksum) {
    BinReader in = open_artifact(file, kStoreMagic, expected_checksum);
    auto alpha = in.get<double>();
    auto eps = in.get<double>();
    auto n = in.get<std::uint64_t>();
    auto total = in.get<std::uint64_t>();
    if (n == std::numeric_limits<std::uint64_t>::max())
        throw ParseError(file.string() + ": bad vertex count", in.pos());
    auto raw = in.get_vector<std::uint64_t>(n + 1);
    check_offsets(raw, total, file);
    std::vector<ScoreEntry> entries;
    entries.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) {
        ScoreEntry e;
        e.vertex = in.get<std::uint32_t>();
        in.get<std::uint32_t>();
        e.score = in.get<double>();
        if (e.vertex >= n)
            throw ParseError(file.string() + ": entry vertex out of range", in.pos());
        entries.push_back(e);
    }
    in.expect_end();
    return PublicPPRStore(alpha, eps, std::vector<std::size_t>(raw.begin(), raw.end()),
                          std::move(entries));
}

void write_ranking_tsv(std::ostream &out, std::span<const ScoreEntry> ranking) {
    char buf[64];
    for (const ScoreEntry &e : ranking) {
        std::snprintf(buf, sizeof buf, "%u\t%.12g\n", e.vertex, e.score);
        out << buf;
    }
}

} // namespace ppgk
