#pragma once

// Checks each printed coherent-state identity under a list of conventions.

#include <string>
#include <vector>

#include "json.hpp"
#include "tg/states.hpp"

namespace tg {

enum class AuditStatus { pass, fail, undefined };

const char* status_name(AuditStatus s);

struct AuditEntry {
  std::string identity;
  std::string convention;
  AuditStatus status = AuditStatus::fail;
  std::string engine_value;
  std::string paper_value;
};

using AuditReport = std::vector<AuditEntry>;

// Identity labels, in report order.
const std::vector<std::string>& audit_identities();

// The values as printed.
StateVec printed_coherent_ket();
GElement printed_overlap();  // bra on xb(0), ket on xi(1), in two_pairs()

AuditReport audit(const std::vector<ConventionConfig>& conventions);
AuditReport audit();  // shipped_conventions()

const AuditEntry* find_entry(const AuditReport& report, const std::string& identity,
                             const std::string& convention);

nlohmann::json to_json(const AuditReport& report);
std::string to_table(const AuditReport& report);

}  // namespace tg
