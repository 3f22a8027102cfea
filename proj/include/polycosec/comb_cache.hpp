#pragma once

#include <filesystem>
#include <string>

namespace polycosec::cache {

inline constexpr int kFormatVersion = 1;

// POLYCOSEC_CACHE_DIR, else XDG_CACHE_HOME/polycosec, else ~/.cache/polycosec.
std::filesystem::path default_cache_dir();
std::filesystem::path default_cache_file();

// The exact bytes save() writes for the current memo tables.
std::string serialize_tables();

// Installs tables from a cache file. Returns false (leaving the memo
// untouched) on a missing file, version mismatch, or malformed content.
bool load(const std::filesystem::path& file);

// Best-effort persist; returns false on I/O failure.
bool save(const std::filesystem::path& file);

} // namespace polycosec::cache
