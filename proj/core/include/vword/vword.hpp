#ifndef VWORD_VWORD_HPP
#define VWORD_VWORD_HPP

#include "vword/bench_util.hpp"
#include "vword/bitstring.hpp"
#include "vword/decider.hpp"
#include "vword/dpda.hpp"
#include "vword/generating_set.hpp"
#include "vword/json_io.hpp"
#include "vword/lang_lab.hpp"
#include "vword/lz.hpp"
#include "vword/report.hpp"
#include "vword/sampling.hpp"
#include "vword/suites.hpp"
#include "vword/table_element.hpp"
#include "vword/word.hpp"

#endif  // VWORD_VWORD_HPP
