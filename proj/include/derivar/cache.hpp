#pragma once

#include <filesystem>

#include "derivar/presentations.hpp"

namespace derivar {

/// File-backed component store. One file per (presentation hash, arity),
/// written via temp file + atomic rename so concurrent processes are safe.
/// Corrupt or mismatched entries are discarded; I/O failures degrade to
/// recomputation with a warning on stderr.
class ComponentDiskCache : public ComponentStore {
public:
    explicit ComponentDiskCache(std::filesystem::path dir, bool verbose = false);

    std::optional<Component> load(const OperadPresentation& p, int arity) override;
    void store(const OperadPresentation& p, int arity, const Component& c) override;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    bool verbose_;
    bool usable_ = true;

    std::filesystem::path entry_path(const OperadPresentation& p, int arity) const;
};

}  // namespace derivar
