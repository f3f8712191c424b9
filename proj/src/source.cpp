#include <cstring>

#include <zlib.h>

#include "ppgk/error.hpp"
#include "ppgk/ingest.hpp"

namespace ppgk {

namespace {

// gzread passes plain files through untouched, so one reader covers both.
class GzFileSource final : public ByteSource {
public:
    explicit GzFileSource(const std::string &path) : path_(path) {
        file_ = gzopen(path.c_str(), "rb");
        if (!file_)
            throw Error(Errc::io, "cannot open " + path + ": " + std::strerror(errno));
        gzbuffer(file_, 1 << 17);
    }
    ~GzFileSource() override { gzclose(file_); }

    GzFileSource(const GzFileSource &) = delete;
    GzFileSource &operator=(const GzFileSource &) = delete;

    std::size_t read(char *buf, std::size_t len) override {
        int n = gzread(file_, buf, unsigned(len));
        if (n < 0) {
            int err = 0;
            const char *msg = gzerror(file_, &err);
            throw Error(Errc::parse, "cannot read " + path_ + ": " + msg);
        }
        return std::size_t(n);
    }

private:
    std::string path_;
    gzFile file_ = nullptr;
};

class StringSource final : public ByteSource {
public:
    explicit StringSource(std::string data) : data_(std::move(data)) {}

    std::size_t read(char *buf, std::size_t len) override {
        std::size_t n = std::min(len, data_.size() - pos_);
        std::memcpy(buf, data_.data() + pos_, n);
        pos_ += n;
        return n;
    }

private:
    std::string data_;
    std::size_t pos_ = 0;
};

} // namespace

std::unique_ptr<ByteSource> open_file_source(const std::string &path) {
    return std::make_unique<GzFileSource>(path);
}

std::unique_ptr<ByteSource> make_string_source(std::string data) {
    return std::make_unique<StringSource>(std::move(data));
}

} // namespace ppgk
