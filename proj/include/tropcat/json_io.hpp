#pragma once

#include <string>
#include <vector>

#include "tropcat/arc.hpp"
#include "tropcat/descent.hpp"
#include "tropcat/hyper.hpp"

namespace tropcat::jsonio {

/// Wire form {"src", "dst", "deg", "eqmod", "vals"}; eqmod defaults to 1 on
/// input, and non-canonical vals are accepted and normalized.
arc::ArcMorphism morphism_from_json(const std::string& text);
std::string morphism_to_json(const arc::ArcMorphism& f, int indent = -1);

/// Wire form {"src", "dst", "table"}.
descent::SetMap setmap_from_json(const std::string& text);
std::string setmap_to_json(const descent::SetMap& s, int indent = -1);

/// Wire form {"mag", "sign"}; the ambient rank travels separately.
hyper::SignedElem signed_from_json(const std::string& text, int rank);
std::string signed_to_json(const hyper::SignedElem& x);
std::string hyperset_to_json(const hyper::HyperSet& xs, int indent = -1);

std::string circle_to_json(int period, int indent = -1);

std::vector<int> int_array_from_json(const std::string& text);

}  // namespace tropcat::jsonio
