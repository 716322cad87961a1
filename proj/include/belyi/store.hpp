#ifndef BELYI_STORE_HPP
#define BELYI_STORE_HPP

#include <optional>
#include <string>
#include <vector>

#include "belyi/model.hpp"

namespace belyi {

/// JSON-lines store of verified models, one entry per line, keyed by
/// (degree, class triple, model index).  Appends write the full line and
/// fsync before returning, so a crash never leaves a partial entry followed
/// by a valid one.
class ResultsStore {
public:
  explicit ResultsStore(std::string path);

  static std::string default_path();  // $BELYI_STORE or ./belyi-store.jsonl

  struct Entry {
    int degree = 0;
    std::string classes;  // "c0 / c1 / cInf"
    int index = 0;
    BelyiMapModel model;
    std::string tool_version;
    std::string raw;  // original line
  };

  // append a verified model; returns the assigned index
  int append(const BelyiMapModel& m);

  // load all entries; with recheck, every model is re-verified and a failing
  // line raises
  std::vector<Entry> load(bool recheck = false) const;

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

}  // namespace belyi

#endif
