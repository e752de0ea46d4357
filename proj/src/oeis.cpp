#include "polytri/oeis.hpp"

#include "polytri/triangle.hpp"

#ifdef POLYTRI_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

namespace polytri {

const OeisEntry* embedded_entry(const std::string& id) {
    for (const OeisEntry& entry : embedded_oeis_entries())
        if (entry.id == id) return &entry;
    return nullptr;
}

std::vector<long long> parse_bfile(std::istream& in) {
    std::vector<long long> values;
    std::string line;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream fields(line.substr(pos));
        long long index = 0, value = 0;
        if (fields >> index >> value) values.push_back(value);
    }
    return values;
}

OeisComparison compare_with_triangle(const std::vector<long long>& reference, int m,
                                     int max_rows) {
    const ColorVector colors(std::vector<Rational>(static_cast<size_t>(m) + 1, Rational(1)));
    OeisComparison out;
    size_t pos = 0;
    for (int k = 0; k < max_rows && pos < reference.size(); ++k) {
        for (const Rational& value : triangle_row(colors, k)) {
            if (pos >= reference.size()) break;
            if (value != reference[pos]) {
                out.match = false;
                out.first_mismatch = pos;
                out.expected = reference[pos];
                out.generated = static_cast<long long>(numerator(value));
                out.compared = pos + 1;
                return out;
            }
            ++pos;
        }
    }
    out.match = true;
    out.compared = pos;
    return out;
}

std::string oeis_cache_dir() {
    if (const char* dir = std::getenv("POLYTRI_CACHE_DIR")) return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::string(xdg) + "/polytri";
    if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/polytri";
    return ".polytri-cache";
}

std::optional<std::string> fetch_bfile(const std::string& id, const std::string& cache_dir) {
    if (id.size() < 2 || id[0] != 'A') return std::nullopt;
    const std::string filename = "b" + id.substr(1) + ".txt";
    const std::filesystem::path cached = std::filesystem::path(cache_dir) / filename;
    if (std::filesystem::exists(cached)) return cached.string();

#ifdef POLYTRI_HAVE_OPENSSL
    httplib::SSLClient client("oeis.org");
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    if (std::filesystem::exists("/etc/ssl/certs/ca-certificates.crt"))
        client.set_ca_cert_path("/etc/ssl/certs/ca-certificates.crt");
    const auto response = client.Get(("/" + id + "/" + filename).c_str());
    if (!response || response->status != 200) return std::nullopt;
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    std::ofstream out(cached);
    if (!out) return std::nullopt;
    out << response->body;
    out.close();
    return cached.string();
#else
    return std::nullopt;
#endif
}

}  // namespace polytri
