#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "densest/stream_file.hpp"

namespace densest {

enum class StreamModel { Gnm, Planted, Churn };

std::string_view to_string(StreamModel model);
StreamModel parse_stream_model(std::string_view name);

struct GenerateParams {
  NodeId n = 0;
  std::uint64_t m = 0;  // background edges
  NodeId k = 0;         // planted clique size (planted, churn)
  unsigned q = 0;       // delete/re-insert rounds per background edge (churn)
};

struct GeneratedStream {
  StreamFile stream;
  std::vector<NodeId> clique;  // sorted; empty for gnm
};

/// gnm: m distinct uniform edges, inserted in random order.
/// planted: gnm background plus every missing edge of a clique on k random nodes.
/// churn: the planted instance, with each background edge deleted and
///   re-inserted q times; all events are uniformly interleaved subject to each
///   edge's own order. Same seed gives the same final graph as planted.
GeneratedStream generate(StreamModel model, const GenerateParams& params, std::uint64_t seed);

}  // namespace densest
