#pragma once

#include "alphabet.hpp"
#include "automaton.hpp"
#include "cellular.hpp"
#include "corpus.hpp"
#include "decision.hpp"
#include "entropy.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "properties.hpp"
#include "shift.hpp"
