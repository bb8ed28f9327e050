#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vdmrec/ast.hpp"

namespace vdmrec {

enum class TokenKind {
    Ident,
    IntLit,
    // keywords
    KwIf, KwThen, KwElse, KwLet, KwIn, KwSet, KwOf, KwMap, KwTo,
    KwNat, KwNat1, KwInt, KwBool, KwTrue, KwFalse,
    KwAnd, KwOr, KwNot, KwUnion, KwDom, KwCard, KwInSet /* fused 'in set' */,
    KwMeasure, KwPre, KwForall, KwMk, KwIsUnder /* is_ */, KwSeq, KwFunctions,
    // punctuation / operators
    LParen, RParen, LBrace, RBrace, LBracket, RBracket,
    Comma, Semi, Colon, Amp, Dot, Pipe, MapsTo /* |-> */,
    Plus, Minus, Star, Backslash,
    Eq /* = */, EqEq /* == */, Neq /* <> */, Lt, Le, Gt, Ge, Imp /* => */, Arrow /* -> */,
    AntiRestrict /* <-: */, AtType /* @A */,
    AnnTag, // --@Name ; `text` holds Name
    AnnEnd, // synthesized at end of an annotation line
    End,
};

struct Token {
    TokenKind kind;
    std::string text; // identifier / literal / annotation name
    Position pos;
};

struct LexError : std::runtime_error {
    Position pos;
    LexError(Position p, const std::string& msg) : std::runtime_error(msg), pos(p) {}
};

// Lexes VDM-SL source. Ordinary `--` comments are dropped; `--@Name(...)`
// comment lines are expanded into AnnTag + payload tokens + AnnEnd.
// Throws LexError (IllegalCharacter) on bytes outside the alphabet.
std::vector<Token> tokenize(const std::string& text);

const char* token_kind_name(TokenKind k);

} // namespace vdmrec
