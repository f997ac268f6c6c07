#pragma once
#include <vector>

// Outcome tables for the chorded 7-cycle and 11-cycle gadget distributions.
// Cells are lists of blocks; each block is a pair of side vertex-position
// lists on the canonically labelled cycle c0..c{l-1}. Every cell has
// probability 1/8. Chord patterns are given as position pairs; a cycle's
// chord set is matched against these patterns over all rotations and
// reflections before a table applies.

namespace bisect::detail {

using SidePositions = std::vector<int>;
using BlockPositions = std::pair<SidePositions, SidePositions>;
using CellPositions = std::vector<BlockPositions>;
using CycleTable = std::vector<CellPositions>;

struct ChordPattern {
    std::vector<std::pair<int, int>> chords;
    const CycleTable* table;
};

inline const CycleTable kC7OneChord = {
            {{{0, 2, 4}, {1, 3, 5}}},
            {{{0, 2, 4}, {1, 3, 6}}},
            {{{0, 2, 5}, {1, 3, 6}}},
            {{{0, 2, 5}, {1, 4, 6}}},
            {{{0}, {6}}, {{2, 4}, {3, 5}}},
            {{{1}, {2}}, {{3, 5}, {4, 6}}},
            {{{0}, {1}}, {{3, 5}, {4, 6}}},
            {{{0, 5}, {4, 6}}, {{2}, {3}}},
};

inline const CycleTable kC7TwoChordsA = {
            {{{0, 2, 4}, {1, 3, 5}}},
            {{{0, 2, 4}, {1, 3, 6}}},
            {{{0, 2, 5}, {1, 3, 6}}},
            {{{0, 2, 5}, {1, 4, 6}}},
            {{{0}, {6}}, {{2, 4}, {3, 5}}},
            {{{1}, {2}}, {{3, 5}, {4, 6}}},
            {{{0}, {1}}, {{3, 5}, {4, 6}}},
            {{{0, 5}, {4, 6}}, {{2}, {3}}},
};

inline const CycleTable kC7TwoChordsB = {
            {{{0, 2, 4}, {1, 3, 6}}},
            {{{0, 2, 5}, {1, 3, 6}}},
            {{{0, 2, 5}, {1, 4, 6}}},
            {{{0}, {1}}, {{3, 5}, {4, 6}}},
            {{{0}, {1}}, {{2, 4}, {3, 5}}},
            {{{0}, {6}}, {{1, 3}, {2, 4}}},
            {{{0, 5}, {4, 6}}, {{2}, {3}}},
            {{{1}, {2}}, {{3, 5}, {4, 6}}},
};

inline const CycleTable kC7ThreeChords = {
            {{{1, 3, 5}, {2, 4, 6}}},
            {{{1, 3, 5}, {2, 4, 6}}},
            {{{0, 2, 4}, {1, 3, 5}}},
            {{{0, 3, 5}, {2, 4, 6}}},
            {{{0, 5}, {1, 6}}, {{2}, {3}}},
            {{{0, 2}, {1, 6}}, {{4}, {5}}},
            {{{0, 2}, {1, 6}}, {{3}, {4}}},
            {{{0, 5}, {1, 6}}, {{3}, {4}}},
};

inline const CycleTable kC11WithFiveChord = {
            {{{0, 2}, {1, 10}}, {{4, 6, 8}, {5, 7, 9}}},
            {{{0, 9}, {8, 10}}, {{1, 3}, {2, 4}}, {{6}, {7}}},
            {{{0, 2}, {1, 3}}, {{4}, {5}}, {{6, 8}, {7, 9}}},
            {{{0}, {1}}, {{3, 5}, {4, 6}}, {{7, 9}, {8, 10}}},
            {{{0, 9}, {8, 10}}, {{1, 3}, {2, 4}}, {{5}, {6}}},
            {{{0, 9}, {1, 10}}, {{2, 4}, {3, 5}}, {{7}, {8}}},
            {{{0, 2}, {1, 10}}, {{3}, {4}}, {{5, 7}, {6, 8}}},
            {{{2}, {3}}, {{4, 6}, {5, 7}}, {{9}, {10}}},
};

inline const CycleTable kC11NoFiveChord = {
            {{{0, 2}, {1, 10}}, {{4, 6, 8}, {5, 7, 9}}},
            {{{0, 9}, {8, 10}}, {{1, 3}, {2, 4}}, {{6}, {7}}},
            {{{0, 2}, {1, 3}}, {{4}, {5}}, {{6, 8}, {7, 9}}},
            {{{0}, {1}}, {{3, 5}, {4, 6}}, {{7, 9}, {8, 10}}},
            {{{0, 9}, {8, 10}}, {{1, 3}, {2, 4}}, {{5}, {6}}},
            {{{0, 9}, {1, 10}}, {{2, 4}, {3, 5}}},
            {{{0, 2}, {1, 10}}, {{3, 5, 7}, {4, 6, 8}}},
            {{{2}, {3}}, {{5, 7}, {6, 8}}, {{9}, {10}}},
};

inline const std::vector<ChordPattern>& c7_chord_patterns() {
    static const std::vector<ChordPattern> patterns = {
        {{{0, 3}}, &kC7OneChord},
        {{{0, 3}, {2, 6}}, &kC7TwoChordsA},
        {{{0, 3}, {1, 5}}, &kC7TwoChordsB},
        {{{1, 4}, {2, 5}, {3, 6}}, &kC7ThreeChords},
    };
    return patterns;
}

}  // namespace bisect::detail
