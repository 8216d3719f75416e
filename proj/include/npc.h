/* npc - polar class degrees, intersection tables and sheaf Euler
 * characteristics for smooth projective schemes over a prime field.
 *
 * C interface.  All functions are thread-compatible: distinct problem
 * handles may be used from distinct threads, a single handle may not.
 * Strings returned through out-parameters are heap allocated and must be
 * released with npc_string_free().
 */
#ifndef NPC_H
#define NPC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum npc_status {
  NPC_OK = 0,
  NPC_ERR_INTERNAL = 1,             /* unexpected failure, see message   */
  NPC_ERR_PARSE = 2,                /* bad JSON, bad polynomial, bad ring */
  NPC_ERR_GENERICITY = 3,           /* random choices kept failing       */
  NPC_ERR_IMPROPER_INTERSECTION = 4,/* divisors do not meet X properly   */
  NPC_ERR_BAD_ARGUMENT = 5          /* unknown command, option, name     */
} npc_status;

/* Opaque problem handle: an ambient ring, a variety ideal, named divisor
 * ideals and the run options. */
typedef struct npc_problem npc_problem;

/* Build a problem from a JSON document:
 *   {"variables": ["x0",...],
 *    "variety":   ["<poly>", ...],
 *    "divisors":  {"D": ["<poly>", ...], ...}}   (divisors optional)
 * On failure returns a status != NPC_OK and, if error_message is non-NULL,
 * stores a description. */
npc_status npc_problem_from_json(const char* json_text, npc_problem** out,
                                 char** error_message);

void npc_problem_free(npc_problem* problem);

/* Integer options: "seed", "prime", "retries", "jobs", "check_smooth",
 * "check_proper" (booleans take 0/1).  Defaults: seed 0, prime 32003,
 * retries 3, jobs 1, check_smooth 0, check_proper 1. */
npc_status npc_problem_set_option(npc_problem* problem, const char* name,
                                  long long value, char** error_message);

/* Restrict and order the divisors used by npc_run.  Comma separated list
 * of declared divisor names.  NULL or "" selects all declared divisors in
 * declaration order. */
npc_status npc_problem_select_divisors(npc_problem* problem,
                                       const char* names,
                                       char** error_message);

/* Commands: "degree", "polar", "products", "euler", "ed", "dual".
 * On success stores a JSON report in *report_json. */
npc_status npc_run(npc_problem* problem, const char* command,
                   char** report_json, char** error_message);

/* Built-in example inputs: "quartic-surface", "veronese-projection",
 * "ci-threefold", "segre-p1p2".  Stores a problem JSON document. */
npc_status npc_fixture_json(const char* name, long long seed,
                            long long prime, char** spec_json,
                            char** error_message);

void npc_string_free(char* s);

const char* npc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* NPC_H */
