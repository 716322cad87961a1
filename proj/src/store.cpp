#include "belyi/store.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <unistd.h>

#include "belyi/json_io.hpp"
#include "belyi/verify.hpp"

namespace belyi {

static const char* kToolVersion = "belyi 1.0";

ResultsStore::ResultsStore(std::string path) : path_(std::move(path)) {}

std::string ResultsStore::default_path() {
  if (const char* env = std::getenv("BELYI_STORE")) return env;
  return "belyi-store.jsonl";
}

int ResultsStore::append(const BelyiMapModel& m) {
  // count existing entries with the same key to assign the index
  int index = 0;
  std::string classes = m.c0.to_string() + " / " + m.c1.to_string() + " / " + m.cInf.to_string();
  {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = json::parse(line, nullptr, false);
      if (j.is_discarded()) continue;
      if (j.value("classes", "") == classes) ++index;
    }
  }
  json entry{{"degree", m.degree()},
             {"classes", classes},
             {"index", index},
             {"model", to_json(m)},
             {"tool", kToolVersion}};
  std::string line = entry.dump();
  line += '\n';
  int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw std::runtime_error("store: cannot open " + path_);
  ssize_t written = ::write(fd, line.data(), line.size());
  if (written != (ssize_t)line.size()) {
    ::close(fd);
    throw std::runtime_error("store: short write to " + path_);
  }
  ::fsync(fd);
  ::close(fd);
  return index;
}

std::vector<ResultsStore::Entry> ResultsStore::load(bool recheck) const {
  std::vector<Entry> out;
  std::ifstream in(path_);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j = json::parse(line);
    Entry e;
    e.degree = j.at("degree").get<int>();
    e.classes = j.at("classes").get<std::string>();
    e.index = j.at("index").get<int>();
    e.model = model_from_json(j.at("model"));
    e.tool_version = j.value("tool", "");
    e.raw = line;
    if (recheck) {
      auto chk = is_belyi(e.model);
      if (!chk.ok || !chk.classes_match)
        throw std::runtime_error("store: entry at line " + std::to_string(lineno) +
                                 " fails re-verification");
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace belyi
