#ifndef TP_LANG_HPP
#define TP_LANG_HPP

#include "tp/lang/ast.hpp"
#include "tp/lang/elaborate.hpp"
#include "tp/lang/lexer.hpp"
#include "tp/lang/parser.hpp"
#include "tp/lang/printer.hpp"
#include "tp/lang/run.hpp"

#endif
