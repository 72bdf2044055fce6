#ifndef LOTTO_DESIGN_IO_HPP
#define LOTTO_DESIGN_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "lotto/block_system.hpp"

namespace lotto {

// One design file: a kind tag, scalar fields, and the block list. The text
// form is canonical (lexicographic blocks, LF endings); the .json form
// carries the same fields as one object.
struct DesignFile {
    std::string kind;                     // sts, sqs, covering, packing, ab_system, lottery, r_system, ...
    int r = 0;
    int n = 0;
    std::map<std::string, int> fields;    // extra scalars such as a, b
    BlockSystem system;                   // n, r mirrored
    std::string provenance = "generated";
};

std::string to_text(const DesignFile& d);
DesignFile from_text(const std::string& content);

std::string to_json_string(const DesignFile& d);
DesignFile from_json_string(const std::string& content);

DesignFile read_design_file(const std::string& path);   // dispatches on extension
void write_design_file(const std::string& path, const DesignFile& d);

// location of the bundled data directory (LOTTO_DATA_DIR env, compiled-in
// default, then ./data)
std::string data_dir();
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
bool file_exists(const std::string& path);

// FNV-1a 64-bit content digest, hex
std::string digest_hex(const std::string& content);

} // namespace lotto

#endif
