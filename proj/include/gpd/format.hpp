#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gpd/fraction.hpp"

namespace gpd {

/// Named structures parsed from one input file, in declaration order.
/// Invariants: names unique per kind, cross-references resolved, every
/// structure validated.
struct Document {
  std::vector<std::pair<std::string, GroupoidPtr>> groupoids;
  std::vector<std::pair<std::string, Functor>> functors;
  std::vector<std::pair<std::string, Fraction>> fractions;

  const GroupoidPtr* find_groupoid(const std::string& name) const;
  const Functor* find_functor(const std::string& name) const;
  const Fraction* find_fraction(const std::string& name) const;
};

/// Parse the line-oriented GPD format ('#' starts a comment):
///
///   groupoid <name>
///     objects <n>
///     arrow <id> <src> <tgt>
///     unit <obj> <arrowid>
///     inv <a> <b>
///     comp <a> <b> <c>        # c = a after b
///   end
///   std <name> = null <k> | pair <k> | cyclic <k> | sym3
///              | equivrel <k> <block list>
///              | action cyclic <k> on <m> <image list>
///              | union <g> <h> | product <g> <h>
///              | induce <g> along <image list>
///   functor <name> : <G> -> <H>
///     obj <x> <y>
///     arr <a> <b>
///   end
///   fraction <name> : <H> <- <K> -> <G>
///     num <functor>
///     den <functor>
///   end
///
/// Syntax problems raise ParseError (with line/column); structures that
/// parse but break their axioms raise ValidationError.
Document parse_document(const std::string& text);

/// Canonical text whose parse yields an identical document (std-built
/// groupoids reserialize as explicit blocks).
std::string serialize_document(const Document& doc);

}  // namespace gpd
