// Convenience umbrella for the whole kernel.
#pragma once

#include "ari/arithmetization.hpp"
#include "ari/bignum.hpp"
#include "ari/calculus.hpp"
#include "ari/checker.hpp"
#include "ari/code.hpp"
#include "ari/corpus.hpp"
#include "ari/enumeration.hpp"
#include "ari/kleene.hpp"
#include "ari/parser.hpp"
#include "ari/script.hpp"
#include "ari/syntax.hpp"
