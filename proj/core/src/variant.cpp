#include "tlc/variant.hpp"

#include "tlc/error.hpp"

#include <string>

namespace tlc {

Variant parse_variant(std::string_view text) {
    if (text == "2") {
        return Variant::spans;
    }
    if (text == "2i") {
        return Variant::single;
    }
    if (text == "2ii") {
        return Variant::single_or_boundary;
    }
    throw Error("unknown variant '" + std::string(text) + "' (expected 2, 2i or 2ii)");
}

std::string_view to_string(Variant variant) {
    switch (variant) {
        case Variant::spans:
            return "2";
        case Variant::single:
            return "2i";
        case Variant::single_or_boundary:
            return "2ii";
    }
    return "?";
}

}  // namespace tlc
