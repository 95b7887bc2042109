#include "wlaudit/errors.hpp"
#include "wlaudit/fetch.hpp"

namespace wlaudit {

Dataset load_dataset(const std::string& name, const FetchConfig& cfg,
                     std::span<const std::filesystem::path> local_roots) {
  const std::string archive = tu_archive_name(name);
  for (const auto& root : local_roots) {
    for (const std::string& candidate : {name, archive}) {
      if (auto dir = find_dataset_dir(root, candidate)) {
        Dataset d = parse_tu_dataset(*dir, candidate);
        d.name = name;
        return d;
      }
    }
  }
  const auto extracted = fetch_dataset(cfg, name);
  auto dir = find_dataset_dir(extracted, archive);
  if (!dir) throw ExtractError("archive for " + name + " holds no " + archive + "_A.txt");
  Dataset d = parse_tu_dataset(*dir, archive);
  d.name = name;
  return d;
}

}  // namespace wlaudit
