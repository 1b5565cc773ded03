#include "tpca_cli/manifest.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "tpca/error.hpp"

namespace tpca::cli {

namespace {
constexpr const char* kHeader = "# tpca run manifest v1";

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}
}  // namespace

void Manifest::set(const std::string& key, std::string value) {
  if (auto it = index_.find(key); it != index_.end()) {
    entries_[it->second].second = std::move(value);
    return;
  }
  index_[key] = entries_.size();
  entries_.emplace_back(key, std::move(value));
}

std::optional<std::string> Manifest::get(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second].second;
}

std::string Manifest::render() const {
  std::string out = std::string(kHeader) + "\n";
  for (const auto& [key, value] : entries_) out += key + " = " + value + "\n";
  return out;
}

Manifest Manifest::parse(const std::string& text) {
  Manifest m;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::BadHeader, "manifest line " + std::to_string(lineno) + " has no '='");
    }
    m.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return m;
}

void Manifest::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot create " + path.string());
  out << render();
  if (!out) throw Error(Errc::IoError, "failed writing " + path.string());
}

Manifest Manifest::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(Errc::IoError, "SHA-256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int n = 0; n < length; ++n) {
    out.push_back(hex[digest[n] >> 4]);
    out.push_back(hex[digest[n] & 0xf]);
  }
  return out;
}

}  // namespace tpca::cli
