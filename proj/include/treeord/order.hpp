#pragma once

namespace treeord {

// Result of comparing two elements under a total order.
enum class Ord { LT, EQ, GT };

inline const char* to_string(Ord o) {
    switch (o) {
        case Ord::LT: return "LT";
        case Ord::EQ: return "EQ";
        case Ord::GT: return "GT";
    }
    return "?";
}

inline Ord flip(Ord o) {
    if (o == Ord::LT) return Ord::GT;
    if (o == Ord::GT) return Ord::LT;
    return Ord::EQ;
}

}  // namespace treeord
