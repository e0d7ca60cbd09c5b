#ifndef TP_TP_HPP
#define TP_TP_HPP

#include "tp/base.hpp"
#include "tp/condition.hpp"
#include "tp/contracts.hpp"
#include "tp/generate.hpp"
#include "tp/lang.hpp"
#include "tp/laws.hpp"
#include "tp/loops.hpp"
#include "tp/program.hpp"
#include "tp/relation.hpp"
#include "tp/state_space.hpp"

#endif
