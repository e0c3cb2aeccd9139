#pragma once

#include <stdexcept>
#include <string>

namespace treeord {

// Invalid input from a caller or a file: unknown identifiers, malformed
// tokens, structural violations. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Input error with a source location. line/col are 1-based; 0 means the
// error is global to the file (e.g. "disconnected").
class ParseError : public InputError {
public:
    ParseError(std::string source, int line, int col, const std::string& msg)
        : InputError(format(source, line, col, msg)),
          source_(std::move(source)), line_(line), col_(col) {}

    const std::string& source() const { return source_; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    static std::string format(const std::string& source, int line, int col,
                              const std::string& msg) {
        std::string out = source.empty() ? "<input>" : source;
        if (line > 0) {
            out += ':' + std::to_string(line);
            if (col > 0) out += ':' + std::to_string(col);
        }
        out += ": " + msg;
        return out;
    }

    std::string source_;
    int line_;
    int col_;
};

}  // namespace treeord
