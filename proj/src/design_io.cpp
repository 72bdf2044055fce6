#include "lotto/design_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lotto {

std::string to_text(const DesignFile& d) {
    std::ostringstream os;
    os << "design " << d.kind << " r=" << d.r << " n=" << d.n
       << " k=" << d.system.blocks.size();
    for (const auto& [key, value] : d.fields) os << ' ' << key << '=' << value;
    os << '\n';
    for (const auto& b : d.system.blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) os << ' ';
            os << b[i];
        }
        os << '\n';
    }
    return os.str();
}

DesignFile from_text(const std::string& content) {
    std::istringstream is(content);
    std::string header;
    if (!std::getline(is, header))
        fail(ErrorCode::IoError, "empty design file");
    std::istringstream hs(header);
    std::string tag;
    hs >> tag;
    if (tag != "design")
        fail(ErrorCode::IoError, "design file must start with 'design'");
    DesignFile d;
    hs >> d.kind;
    std::string kv;
    long declared_k = -1;
    while (hs >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            fail(ErrorCode::IoError, "bad header token: " + kv);
        std::string key = kv.substr(0, eq);
        int value = std::stoi(kv.substr(eq + 1));
        if (key == "r") d.r = value;
        else if (key == "n") d.n = value;
        else if (key == "k") declared_k = value;
        else d.fields[key] = value;
    }
    d.system.n = d.n;
    d.system.r = d.r;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Block b;
        int x;
        while (ls >> x) b.push_back(x);
        d.system.blocks.push_back(std::move(b));
    }
    if (declared_k >= 0 && declared_k != static_cast<long>(d.system.blocks.size()))
        fail(ErrorCode::IoError, "declared k does not match block count");
    d.system.validate();
    return d;
}

std::string to_json_string(const DesignFile& d) {
    nlohmann::json j;
    j["kind"] = d.kind;
    j["r"] = d.r;
    j["n"] = d.n;
    for (const auto& [key, value] : d.fields) j[key] = value;
    j["provenance"] = d.provenance;
    j["blocks"] = d.system.blocks;
    return j.dump() + "\n";
}

DesignFile from_json_string(const std::string& content) {
    nlohmann::json j = nlohmann::json::parse(content);
    DesignFile d;
    d.kind = j.at("kind").get<std::string>();
    d.r = j.at("r").get<int>();
    d.n = j.at("n").get<int>();
    if (j.contains("provenance")) d.provenance = j["provenance"].get<std::string>();
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "kind" || it.key() == "r" || it.key() == "n" ||
            it.key() == "provenance" || it.key() == "blocks")
            continue;
        if (it.value().is_number_integer()) d.fields[it.key()] = it.value().get<int>();
    }
    d.system.n = d.n;
    d.system.r = d.r;
    d.system.blocks = j.at("blocks").get<std::vector<Block>>();
    d.system.validate();
    return d;
}

static bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

DesignFile read_design_file(const std::string& path) {
    std::string content = read_file(path);
    return ends_with(path, ".json") ? from_json_string(content) : from_text(content);
}

void write_design_file(const std::string& path, const DesignFile& d) {
    write_file(path, ends_with(path, ".json") ? to_json_string(d) : to_text(d));
}

std::string data_dir() {
    if (const char* env = std::getenv("LOTTO_DATA_DIR")) return env;
#ifdef LOTTO_DATA_DIR_DEFAULT
    if (file_exists(std::string(LOTTO_DATA_DIR_DEFAULT))) return LOTTO_DATA_DIR_DEFAULT;
#endif
    return "data";
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::IoError, "cannot write " + path);
    f << content;
}

bool file_exists(const std::string& path) {
    std::ifstream f(path);
    return f.good();
}

std::string digest_hex(const std::string& content) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace lotto
