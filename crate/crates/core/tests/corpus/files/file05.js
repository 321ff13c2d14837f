list;
var name;
handler(index, 12)();
node(items, (!data()?.node));
if ({ limit: count.render  }) {
value = index;
options = true;
}
node?.name({ ...count  })(entry(), (28));
export function check() {
}
return;
entry.compute(count, "");
node = {   };
return [user,path?.config,(total: Map<string, number>, state = index) =>  {
return node;
let user, entry: Array<string> =(index), value;
}];
