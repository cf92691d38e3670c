match () {
  _ if mutation_active("foo_1") => {
    foo(1)
  }
  _ => {
    foo(0)
  }
}
