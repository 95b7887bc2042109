#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wlaudit {

// Coarse failure category; the CLI maps these onto exit codes.
enum class ErrorKind {
  kInvalidGraph,
  kParse,
  kFetch,
  kCompute,
  kBudget,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// graph-core

class SelfLoopError : public Error {
 public:
  explicit SelfLoopError(std::size_t node)
      : Error(ErrorKind::kInvalidGraph, "self-loop on node " + std::to_string(node)), node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

class IndexOutOfRangeError : public Error {
 public:
  IndexOutOfRangeError(std::size_t index, std::size_t node_count)
      : Error(ErrorKind::kInvalidGraph, "node index " + std::to_string(index) +
                                            " out of range for graph with " +
                                            std::to_string(node_count) + " nodes") {}
};

class LabelLengthMismatchError : public Error {
 public:
  LabelLengthMismatchError(std::size_t labels, std::size_t node_count)
      : Error(ErrorKind::kInvalidGraph, "got " + std::to_string(labels) + " node labels for " +
                                            std::to_string(node_count) + " nodes") {}
};

// tudataset-io

class MissingFileError : public Error {
 public:
  explicit MissingFileError(const std::string& path)
      : Error(ErrorKind::kParse, "missing file: " + path) {}
};

class MalformedLineError : public Error {
 public:
  MalformedLineError(const std::string& file, std::size_t line_no, const std::string& detail)
      : Error(ErrorKind::kParse,
              file + ":" + std::to_string(line_no) + ": " + detail),
        file_(file),
        line_no_(line_no) {}
  const std::string& file() const noexcept { return file_; }
  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::string file_;
  std::size_t line_no_;
};

class DanglingEdgeError : public Error {
 public:
  DanglingEdgeError(std::size_t line_no, std::size_t u, std::size_t v)
      : Error(ErrorKind::kParse, "edge on line " + std::to_string(line_no) + " joins nodes " +
                                     std::to_string(u) + " and " + std::to_string(v) +
                                     " of different graphs") {}
};

class EmptyDatasetError : public Error {
 public:
  explicit EmptyDatasetError(const std::string& name)
      : Error(ErrorKind::kParse, "dataset " + name + " contains no graphs") {}
};

class FetchError : public Error {
 public:
  explicit FetchError(const std::string& what) : Error(ErrorKind::kFetch, what) {}
};

class ChecksumMismatchError : public FetchError {
 public:
  ChecksumMismatchError(const std::string& expected, const std::string& actual)
      : FetchError("checksum mismatch: expected " + expected + ", got " + actual) {}
};

class ExtractError : public FetchError {
 public:
  explicit ExtractError(const std::string& what) : FetchError("zip extraction failed: " + what) {}
};

// wl-engine

class MissingLabelsError : public Error {
 public:
  MissingLabelsError() : Error(ErrorKind::kCompute, "node labels requested but graph has none") {}
};

class DimensionTooSmallError : public Error {
 public:
  DimensionTooSmallError(std::size_t dim, std::size_t needed)
      : Error(ErrorKind::kCompute, "dimension " + std::to_string(dim) + " too small, need " +
                                       std::to_string(needed)) {}
};

// iso-exact

class IsoTimeoutError : public Error {
 public:
  explicit IsoTimeoutError(std::size_t budget, std::size_t first = 0, std::size_t second = 0)
      : Error(ErrorKind::kBudget, "isomorphism search exceeded " + std::to_string(budget) +
                                      " node expansions (graphs " + std::to_string(first) +
                                      ", " + std::to_string(second) + ")"),
        budget_(budget),
        first_(first),
        second_(second) {}
  std::size_t budget() const noexcept { return budget_; }
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t budget_;
  std::size_t first_;
  std::size_t second_;
};

// motif-census

class CountingInfeasibleError : public Error {
 public:
  CountingInfeasibleError(std::size_t budget, std::size_t graph_index)
      : Error(ErrorKind::kBudget, "motif enumeration exceeded " + std::to_string(budget) +
                                      " subgraphs on graph " + std::to_string(graph_index)),
        budget_(budget),
        graph_index_(graph_index) {}
  std::size_t budget() const noexcept { return budget_; }
  std::size_t graph_index() const noexcept { return graph_index_; }

 private:
  std::size_t budget_;
  std::size_t graph_index_;
};

}  // namespace wlaudit
