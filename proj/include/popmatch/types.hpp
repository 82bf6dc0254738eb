#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace popmatch {

/// Which side of the bipartition a vertex lives on.
enum class Side { Agent, Job };

/// Lightweight vertex handle: (side, index). Display names are owned by the
/// instance. All deterministic tie-breaking in the library orders by
/// (side, index).
struct VertexId {
    Side side;
    int index;

    friend constexpr bool operator==(const VertexId&, const VertexId&) = default;
    friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;
};

constexpr VertexId agent_id(int index) { return VertexId{Side::Agent, index}; }
constexpr VertexId job_id(int index) { return VertexId{Side::Job, index}; }

/// Preference model of an instance.
///
///  - OneSided: agents rank neighbours strictly, jobs carry no preferences
///    and never vote.
///  - TwoSidedOneTie: agents rank strictly, every job is indifferent among
///    all its neighbours but votes for the matching that saturates it.
///  - TwoSidedTies: both sides rank with ties; every tie group has at most
///    `tie_cap` members.
enum class Model { OneSided, TwoSidedOneTie, TwoSidedTies };

struct ModelTag {
    Model model = Model::OneSided;
    int tie_cap = 1;  // only meaningful for TwoSidedTies

    friend bool operator==(const ModelTag&, const ModelTag&) = default;
};

/// Ranked preference list: an ordered sequence of tie groups, most preferred
/// first. A singleton group is a strict rank. Groups are non-empty, pairwise
/// disjoint, and their union is exactly the owner's neighbour set.
struct PreferenceList {
    std::vector<std::vector<VertexId>> groups;

    bool strict() const {
        for (const auto& g : groups)
            if (g.size() != 1) return false;
        return true;
    }
    int max_group_size() const {
        std::size_t m = 0;
        for (const auto& g : groups) m = g.size() > m ? g.size() : m;
        return static_cast<int>(m);
    }
    std::size_t item_count() const {
        std::size_t n = 0;
        for (const auto& g : groups) n += g.size();
        return n;
    }

    friend bool operator==(const PreferenceList&, const PreferenceList&) = default;
};

/// Input text could not be parsed; `line` is 1-based.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// An exhaustive operation was asked to run on an instance larger than its cap.
class SizeLimitError : public std::runtime_error {
  public:
    SizeLimitError(int size, int cap)
        : std::runtime_error("instance has " + std::to_string(size) +
                             " vertices, exceeding the brute-force cap of " +
                             std::to_string(cap)),
          size_(size), cap_(cap) {}
    int size() const { return size_; }
    int cap() const { return cap_; }

  private:
    int size_, cap_;
};

/// Two instances do not form a single-agent perturbation pair.
class PerturbationError : public std::runtime_error {
  public:
    explicit PerturbationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace popmatch
