#pragma once

#include <memory>

#include "qdp/drinfeld.hpp"
#include "qdp/liebialg.hpp"
#include "qdp/pairing.hpp"

namespace qdp {

/// Owns loaded presentations (stable addresses) and resolves builtin names
/// against the data directory. QDP_DATA_DIR overrides the compiled-in path.
class Registry {
 public:
  static Registry& global();
  explicit Registry(std::string data_dir = {});

  const std::string& data_dir() const { return dir_; }
  std::vector<std::string> catalog() const;

  const Presentation* presentation(const std::string& name);
  const std::vector<Element>& lattice_of(const std::string& name);
  SubobjectSpec subobject(const std::string& name,
                          const std::map<std::string, Scalar>& params = {});
  LieBialgebra liebialgebra(const std::string& name);
  PairingSpec pairing(const std::string& name);

  /// Classical counterpart of a builtin subobject: generators specialized
  /// over the classical host named `classical_host`.
  SubobjectSpec classical_subobject(const std::string& name,
                                    const std::string& classical_host,
                                    const std::map<std::string, Scalar>& params);

  // file-format entry points (user files use the same formats)
  const Presentation* load_presentation_file(const std::string& path);
  SubobjectSpec load_subobject_file(const std::string& path,
                                    const std::map<std::string, Scalar>& params);
  LieBialgebra load_liebialgebra_file(const std::string& path);
  PairingSpec load_pairing_file(const std::string& path);

  /// Per-presentation workspace, kept alive with the registry.
  Workspace& workspace(const Presentation* p);

  int validation_degree = 2;

 private:
  std::string dir_;
  std::map<std::string, std::unique_ptr<Presentation>> pres_;
  std::map<std::string, std::vector<Element>> lattices_;
  std::map<const Presentation*, std::unique_ptr<Workspace>> workspaces_;
};

}  // namespace qdp
