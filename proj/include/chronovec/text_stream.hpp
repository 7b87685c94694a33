#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace chronovec {

// Line reader over a byte stream. Gzip input is inflated transparently,
// detected by the 0x1f 0x8b magic bytes; concatenated gzip members are
// supported. Lines are split on LF only; the final line may lack one.
class TextLineStream {
public:
    explicit TextLineStream(std::istream& in);
    ~TextLineStream();

    TextLineStream(const TextLineStream&) = delete;
    TextLineStream& operator=(const TextLineStream&) = delete;

    std::optional<std::string> next_line();

    // 1-based number of the last line returned by next_line().
    std::uint64_t line_number() const { return line_number_; }

    // Raw (possibly compressed) bytes consumed from the underlying stream.
    std::uint64_t bytes_consumed() const { return bytes_consumed_; }

    bool compressed() const { return gzip_; }

private:
    bool fill(); // decodes more input; false once the source is exhausted

    std::istream& in_;
    bool gzip_ = false;
    bool source_eof_ = false;
    bool decode_done_ = false;

    struct ZState;
    std::unique_ptr<ZState> z_; // keeps zlib out of this header

    std::vector<unsigned char> raw_;  // unconsumed compressed input
    std::size_t raw_pos_ = 0;
    std::string decoded_;
    std::size_t pos_ = 0;

    std::uint64_t line_number_ = 0;
    std::uint64_t bytes_consumed_ = 0;
};

} // namespace chronovec
