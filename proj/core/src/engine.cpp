#include "basket/engine.hpp"

#include <string>

#include "basket/apriori.hpp"
#include "basket/errors.hpp"
#include "basket/fp_growth.hpp"
#include "basket/oracle.hpp"

namespace basket {

Algorithm parse_algorithm(std::string_view name) {
  if (name == "apriori") return Algorithm::apriori;
  if (name == "fpgrowth") return Algorithm::fpgrowth;
  if (name == "bruteforce") return Algorithm::bruteforce;
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::apriori: return "apriori";
    case Algorithm::fpgrowth: return "fpgrowth";
    case Algorithm::bruteforce: return "bruteforce";
  }
  return "unknown";
}

std::vector<FrequentItemset> mine(const TransactionDb& db, const MiningParams& params,
                                  Algorithm algorithm, PhaseStats* stats) {
  switch (algorithm) {
    case Algorithm::apriori: return apriori_mine(db, params, stats);
    case Algorithm::fpgrowth: return fp_growth(db, params, stats);
    case Algorithm::bruteforce: return brute_force_mine(db, params, stats);
  }
  throw ContractError("unknown algorithm");
}

}  // namespace basket
